#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "rbs/gsb.hpp"
#include "rbs/hopf.hpp"
#include "rbs/json_io.hpp"
#include "rbs/rewriting.hpp"
#include "rbs/syntax.hpp"

namespace rbs::cli {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Config {
    std::string generators = "x";
    std::string operators = "R,S";
    std::string format = "text";
    bool ascii = false;
    bool trace = false;
    std::size_t max_degree = 2;
    std::optional<std::size_t> hopf_degree;
    std::string bounds;
    std::uint64_t seed = HopfBounds{}.seed;
    std::size_t random_pairs = HopfBounds{}.random_pairs;
    std::vector<std::string> mutations;
    std::string target;
    std::vector<std::string> exprs;
};

std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream in(s);
    for (std::string item; std::getline(in, item, ',');) {
        item.erase(0, item.find_first_not_of(" \t"));
        item.erase(item.find_last_not_of(" \t") + 1);
        out.push_back(item);
    }
    return out;
}

std::size_t parse_count(const std::string& s, const std::string& what) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw UsageError("malformed " + what + ": '" + s + "'");
    try {
        return std::stoul(s);
    } catch (const std::exception&) {
        throw UsageError("malformed " + what + ": '" + s + "'");
    }
}

GsbBounds parse_bounds(const std::string& text) {
    GsbBounds b;
    if (text.empty()) return b;
    for (const auto& item : split_list(text)) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw UsageError("malformed bounds entry '" + item + "'");
        auto key = item.substr(0, eq);
        auto value = parse_count(item.substr(eq + 1), "bound");
        if (key == "uvw") b.uvw_degree = value;
        else if (key == "pi") b.pi_degree = value;
        else throw UsageError("unknown bound '" + key + "' (expected uvw or pi)");
    }
    return b;
}

RelationSystem apply_mutations(const Signature& sig, const std::vector<std::string>& mutations) {
    auto rules = RelationSystem::standard(sig);
    for (const auto& m : mutations) {
        auto colon = m.find(':');
        if (colon == std::string::npos) throw UsageError("--mutate expects OP:POSITION, got '" + m + "'");
        auto op = sig.find_operator(m.substr(0, colon));
        if (!op) throw UsageError("--mutate: unknown operator '" + m.substr(0, colon) + "'");
        auto pos = parse_count(m.substr(colon + 1), "mutation position");
        if (pos > 2) throw UsageError("--mutate position must be 0, 1 or 2");
        rules = rules.with_flipped_sign(*op, static_cast<int>(pos));
    }
    return rules;
}

unsigned thread_cap() {
    const char* env = std::getenv("RBS_KERNEL_THREADS");
    if (!env || !*env) return 0;
    return static_cast<unsigned>(parse_count(env, "RBS_KERNEL_THREADS"));
}

class Runner {
public:
    Runner(const Config& cfg, std::ostream& out)
        : cfg_(cfg), out_(out),
          sig_(split_list(cfg.generators), split_list(cfg.operators)),
          json_(cfg.format == "json"), opts_{cfg.ascii} {}

    int normalize() {
        Poly p = parse_poly(expr(0), sig_);
        ReductionTrace trace;
        Poly nf = normal_form(p, RelationSystem::standard(sig_), Strategy::LeftmostOutermost,
                              cfg_.trace ? &trace : nullptr);
        if (json_) {
            out_ << (cfg_.trace ? to_json(trace, sig_) : to_json(nf, sig_)).dump(2) << '\n';
            return kOk;
        }
        if (cfg_.trace) {
            for (const auto& s : trace.steps)
                out_ << "# " << format_scalar(s.coefficient) << " * " << format(s.matched, sig_, opts_)
                     << " -> " << format(s.replacement, sig_, opts_) << '\n';
        }
        out_ << format(nf, sig_, opts_) << '\n';
        return kOk;
    }

    int mul() {
        Poly a = normal(expr(0));
        Poly b = normal(expr(1));
        return emit(diamond_poly(sig_, a, b));
    }

    int coprod() {
        Bialgebra h(sig_);
        TensorPoly t = h.coproduct(normal(expr(0)));
        if (json_) out_ << to_json(t, sig_).dump(2) << '\n';
        else out_ << format(t, sig_, opts_) << '\n';
        return kOk;
    }

    int counit() {
        Scalar c = Bialgebra::counit(normal(expr(0)));
        if (json_) out_ << Json{{"counit", format_scalar(c)}}.dump(2) << '\n';
        else out_ << format_scalar(c) << '\n';
        return kOk;
    }

    int antipode() {
        Bialgebra h(sig_);
        return emit(h.antipode(normal(expr(0))));
    }

    int basis() {
        const auto rels = instantiate_relations(RelationSystem::standard(sig_), cfg_.max_degree);
        std::vector<std::vector<Word>> by_degree(cfg_.max_degree + 1);
        for (auto& w : enumerate_words(sig_, cfg_.max_degree))
            if (is_rbs_word(w)) by_degree[w.degree()].push_back(std::move(w));
        if (json_) {
            Json degrees = Json::array();
            for (std::size_t d = 0; d < by_degree.size(); ++d) {
                Json words = Json::array();
                for (const auto& w : by_degree[d]) words.push_back(format(w, sig_));
                degrees.push_back({{"degree", d}, {"count", by_degree[d].size()}, {"words", words}});
            }
            out_ << Json{{"max_degree", cfg_.max_degree}, {"degrees", degrees}}.dump(2) << '\n';
            return kOk;
        }
        for (std::size_t d = 0; d < by_degree.size(); ++d) {
            out_ << "# degree " << d << ": " << by_degree[d].size() << '\n';
            for (const auto& w : by_degree[d]) out_ << format(w, sig_, opts_) << '\n';
        }
        return kOk;
    }

    int verify() {
        const std::string& what = cfg_.target;
        if (what != "gsb" && what != "hopf" && what != "all")
            throw UsageError("verify target must be gsb, hopf or all");
        const GsbBounds gb = parse_bounds(cfg_.bounds);
        const RelationSystem rules = apply_mutations(sig_, cfg_.mutations);
        HopfBounds hb;
        if (cfg_.hopf_degree) hb.max_degree = *cfg_.hopf_degree;
        hb.seed = cfg_.seed;
        hb.random_pairs = cfg_.random_pairs;
        const unsigned threads = thread_cap();

        bool ok = true;
        Json report = Json::object();
        if (what != "hopf") {
            GsbReport r = verify_gsb(rules, gb, threads);
            ok = ok && r.passed();
            if (json_) report["gsb"] = to_json(r, sig_);
            else print(r);
        }
        if (what != "gsb") {
            HopfReport r = verify_hopf(sig_, hb, threads);
            ok = ok && r.passed();
            if (json_) report["hopf"] = to_json(r);
            else print(r);
        }
        if (json_) {
            if (what != "all") report = report.begin().value();
            out_ << report.dump(2) << '\n';
        }
        return ok ? kOk : kVerificationFailed;
    }

private:
    const std::string& expr(std::size_t i) const {
        if (i >= cfg_.exprs.size()) throw UsageError("missing expression argument");
        return cfg_.exprs[i];
    }

    Poly normal(const std::string& text) const {
        return normal_form(parse_poly(text, sig_), RelationSystem::standard(sig_));
    }

    int emit(const Poly& p) {
        if (json_) out_ << to_json(p, sig_).dump(2) << '\n';
        else out_ << format(p, sig_, opts_) << '\n';
        return kOk;
    }

    void print(const GsbReport& r) {
        out_ << "gsb: uvw=" << r.bounds.uvw_degree << " pi=" << r.bounds.pi_degree << '\n';
        for (const auto& f : r.families) {
            out_ << "  " << (f.failures.empty() ? "PASS" : "FAIL") << ' ' << f.family << "  "
                 << f.instances_checked << " compositions";
            if (!f.failures.empty()) out_ << ", " << f.failures.size() << " not trivial";
            out_ << '\n';
            for (std::size_t i = 0; i < std::min<std::size_t>(3, f.failures.size()); ++i) {
                const auto& x = f.failures[i];
                out_ << "    u=" << format(x.u, sig_, opts_) << " v=" << format(x.v, sig_, opts_)
                     << " w=" << format(x.w, sig_, opts_);
                if (x.pi) out_ << " pi=" << format(*x.pi, sig_, opts_);
                out_ << " residual=" << format(x.residual, sig_, opts_) << '\n';
            }
        }
        out_ << "gsb: " << (r.passed() ? "PASS" : "FAIL") << " (" << r.instances_checked()
             << " compositions)\n";
    }

    void print(const HopfReport& r) {
        out_ << "hopf: max_degree=" << r.bounds.max_degree << " random_pairs=" << r.bounds.random_pairs
             << " seed=" << r.bounds.seed << '\n';
        for (const auto& s : r.suites) {
            out_ << "  " << (s.passed() ? "PASS" : "FAIL") << ' ' << s.suite << "  " << s.checked
                 << " checked\n";
            for (std::size_t i = 0; i < std::min<std::size_t>(3, s.failures.size()); ++i) {
                const auto& f = s.failures[i];
                out_ << "    " << f.input << ": " << f.lhs << " vs " << f.rhs << '\n';
            }
        }
        out_ << "  info left antipode: ";
        if (r.left_antipode_holds) {
            out_ << "holds on every word checked\n";
        } else {
            const auto& c = *r.left_antipode_counterexample;
            out_ << "fails at " << c.input << ": " << c.lhs << " vs " << c.rhs << '\n';
        }
        out_ << "hopf: " << (r.passed() ? "PASS" : "FAIL") << '\n';
    }

    const Config& cfg_;
    std::ostream& out_;
    Signature sig_;
    bool json_;
    FormatOptions opts_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Config cfg;
    CLI::App app{"Exact kernel for the free Rota-Baxter system", "rbs"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--generators", cfg.generators, "comma separated generator names")->capture_default_str();
    app.add_option("--operators", cfg.operators, "comma separated operators, highest rank first")
        ->capture_default_str();
    app.add_option("--format", cfg.format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();
    app.add_flag("--ascii", cfg.ascii, "print # and (x) instead of the star and tensor signs");

    auto* normalize = app.add_subcommand("normalize", "normal form of an expression");
    normalize->add_option("expr", cfg.exprs)->required()->expected(1);
    normalize->add_flag("--trace", cfg.trace, "print every rewrite step");

    auto* mul = app.add_subcommand("mul", "diamond product of two expressions");
    mul->add_option("exprs", cfg.exprs)->required()->expected(2);

    auto* coprod = app.add_subcommand("coprod", "coproduct");
    coprod->add_option("expr", cfg.exprs)->required()->expected(1);
    auto* counit = app.add_subcommand("counit", "counit");
    counit->add_option("expr", cfg.exprs)->required()->expected(1);
    auto* antipode = app.add_subcommand("antipode", "right antipode");
    antipode->add_option("expr", cfg.exprs)->required()->expected(1);

    auto* basis = app.add_subcommand("basis", "list RBS words by degree");
    basis->add_option("--max-degree", cfg.max_degree)->capture_default_str();

    auto* verify = app.add_subcommand("verify", "bounded verification of the basis and Hopf claims");
    verify->add_option("target", cfg.target, "gsb, hopf or all")->required();
    verify->add_option("--bounds", cfg.bounds, "uvw=N,pi=M (default uvw=1,pi=1)");
    verify->add_option("--max-degree", cfg.hopf_degree, "Hopf suite degree bound (default 4)");
    verify->add_option("--seed", cfg.seed)->capture_default_str();
    verify->add_option("--random-pairs", cfg.random_pairs)->capture_default_str();
    verify->add_option("--mutate", cfg.mutations, "flip one relation sign, OP:POSITION (0, 1 or 2)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        Runner runner(cfg, out);
        if (*normalize) return runner.normalize();
        if (*mul) return runner.mul();
        if (*coprod) return runner.coprod();
        if (*counit) return runner.counit();
        if (*antipode) return runner.antipode();
        if (*basis) return runner.basis();
        return runner.verify();
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
    }
    return kUsage;
}

}  // namespace rbs::cli
