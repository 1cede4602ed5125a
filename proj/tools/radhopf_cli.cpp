#include "radhopf/gp_enum.hpp"
#include "radhopf/hopf.hpp"
#include "radhopf/profinite.hpp"
#include "radhopf/smash.hpp"
#include "radhopf/suite.hpp"
#include "radhopf/variants.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace radhopf;
using nlohmann::json;

namespace {

enum Exit { kOk = 0, kFail = 1, kUsage = 2, kCap = 3 };

struct Flags {
    Exp p = 3;
    unsigned n = 1;
    unsigned m = 0;
    long i = -1;
    long j = -1;
    long k = -1;
    long l = -1;
    unsigned r = 0;
    std::string a = "2";
    unsigned level = 3;
    std::uint64_t seed = 20240611;
    std::string format = "json";
    std::string out;
    std::string input;
    bool all = false;
    bool no_timing = false;
};

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InvalidArgument(path + ": " + e.what());
    }
}

std::string report_line(const Report& r) {
    std::ostringstream line;
    line << (r.passed() ? "PASS" : r.status == Status::Fail ? "FAIL" : "SKIP") << "  " << r.claim << "  " << r.parameters.dump();
    if (r.witness) line << "  witness=" << r.witness->dump();
    line << "  " << r.elapsed_ms << "ms";
    return line.str();
}

class Output {
  public:
    explicit Output(const Flags& f) : flags_(f) {}

    void value(const std::string& key, json v, const std::string& text) {
        doc_[key] = std::move(v);
        text_ << text << '\n';
    }

    void report(Report r) {
        if (flags_.no_timing) r.elapsed_ms = 0;
        text_ << report_line(r) << '\n';
        reports_.push_back(to_json(r));
        failed_ += r.status == Status::Fail ? 1 : 0;
    }

    int finish() {
        if (!reports_.empty()) {
            doc_["reports"] = reports_;
            doc_["summary"] = {{"total", reports_.size()}, {"failed", failed_}};
            text_ << reports_.size() - failed_ << "/" << reports_.size() << " passed\n";
        }
        const std::string body = flags_.format == "json" ? doc_.dump(2) + "\n" : text_.str();
        if (flags_.out.empty()) {
            std::cout << body;
        } else {
            std::ofstream file(flags_.out);
            if (!file) throw InvalidArgument("cannot write " + flags_.out);
            file << body;
        }
        return failed_ == 0 ? kOk : kFail;
    }

  private:
    const Flags& flags_;
    json doc_ = json::object();
    json reports_ = json::array();
    std::size_t failed_ = 0;
    std::ostringstream text_;
};

Exp index_flag(long value, const char* name, const FieldDescriptor& f) {
    if (value < 0 || value >= f.pn) throw InvalidArgument(std::string("--") + name + " must lie in 0..p^n-1");
    return static_cast<Exp>(value);
}

std::string group_ring_text(const GroupRingElt& x) {
    std::ostringstream s;
    for (Exp b = 0; b < x.order(); ++b) {
        s << "sigma^" << b << ":";
        for (const auto& c : x.coeff(b).coeffs()) s << ' ' << format_rat(c);
        if (b + 1 < x.order()) s << '\n';
    }
    return s.str();
}

std::string rats_text(const std::vector<Rat>& v) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : " ") + format_rat(x);
    return s;
}

int run_basis(const Flags& fl) {
    const auto f = FieldDescriptor::make(fl.p, fl.n);
    Output out(fl);
    auto list = json::array();
    std::string text;
    for (Exp i = 0; i < f.pn; ++i) {
        if (fl.i >= 0 && i != index_flag(fl.i, "i", f)) continue;
        const auto e = e_basis(f, i);
        list.push_back({{"i", i}, {"coeffs", to_json(e)}});
        text += "e_" + std::to_string(i) + "\n" + group_ring_text(e) + "\n";
    }
    out.value("p", fl.p, "p = " + std::to_string(fl.p));
    out.value("n", fl.n, "n = " + std::to_string(fl.n));
    out.value("basis", list, text);
    return out.finish();
}

int run_act(const Flags& fl) {
    const auto f = FieldDescriptor::make(fl.p, fl.n);
    const Rat a = parse_rat(fl.a);
    validate_radicand(fl.p, a);
    HElt h = fl.i >= 0 ? HElt::basis(f, index_flag(fl.i, "i", f)) : HElt::unit(f);
    RadicalElt x = RadicalElt::zero(f, a);
    if (!fl.input.empty()) {
        const auto doc = read_json_file(fl.input);
        if (doc.contains("h")) h = helt_from_json(f, doc.at("h"));
        if (doc.contains("x")) x = radical_from_json(doc.at("x"));
    } else {
        if (fl.k < 0) throw InvalidArgument("act needs --k or --input");
        x = RadicalElt::w_power(f, a, static_cast<Exp>(fl.k));
    }
    const auto y = act(h, x);
    Output out(fl);
    out.value("h", to_json(h), "h = " + rats_text(h.coords));
    out.value("x", to_json(x), "x = " + rats_text(x.coords));
    out.value("result", to_json(y), "h(x) = " + rats_text(y.coords));
    return out.finish();
}

int run_smash(const Flags& fl) {
    const auto f = FieldDescriptor::make(fl.p, fl.n);
    const Rat a = parse_rat(fl.a);
    validate_radicand(fl.p, a);
    Output out(fl);
    if (fl.m > 0) {
        const auto h = hom_subalgebra_basis(fl.n, fl.m, fl.p);
        auto pairs = json::array();
        for (const auto& [j, i] : h.pairs) pairs.push_back({j, i});
        out.value("hom_basis", {{"n", h.n}, {"m", h.m}, {"level", h.level}, {"pairs", pairs}},
                  "hom basis dimension " + std::to_string(h.dimension()) + " at level " + std::to_string(h.level));
        out.report(hom_subalgebra_check(fl.n, fl.m, fl.p, a));
        return out.finish();
    }
    if (fl.all || fl.j < 0) {
        auto list = json::array();
        std::string text;
        for (Exp j = 0; j < f.pn; ++j)
            for (Exp i = 0; i < f.pn; ++i) {
                const auto s = format_matrix_symbolic(to_end_matrix(SmashElt::basis(f, a, j, i)), a);
                list.push_back({{"j", j}, {"i", i}, {"matrix", s}});
                text += "w^" + std::to_string(j) + "#e_" + std::to_string(i) + " " + s + "\n";
            }
        out.value("matrices", list, text);
        out.report(iso_check(fl.p, fl.n, a, fl.seed));
        return out.finish();
    }
    const auto x = SmashElt::basis(f, a, index_flag(fl.j, "j", f), index_flag(fl.i, "i", f));
    if (fl.k < 0 && fl.l < 0) {
        const auto m = to_end_matrix(x);
        out.value("matrix", matrix_to_json(m, fl.p, fl.n, a), format_matrix_symbolic(m, a));
        return out.finish();
    }
    const auto y = SmashElt::basis(f, a, index_flag(fl.k, "k", f), index_flag(fl.l, "l", f));
    const auto z = smash_mult(x, y);
    std::string text;
    for (const auto& [key, c] : z.terms)
        text += format_rat(c) + " w^" + std::to_string(key.first) + "#e_" + std::to_string(key.second) + "\n";
    out.value("product", to_json(z), text.empty() ? "0" : text);
    out.value("matrix", matrix_to_json(to_end_matrix(z), fl.p, fl.n, a), format_matrix_symbolic(to_end_matrix(z), a));
    return out.finish();
}

int run_decompose(const Flags& fl) {
    if (fl.input.empty()) throw InvalidArgument("decompose needs --input with a matrix document");
    const auto doc = read_json_file(fl.input);
    const auto m = matrix_from_json(doc);
    const Exp p = doc.at("p").get<Exp>();
    const unsigned n = doc.at("n").get<unsigned>();
    const Rat a = parse_rat(doc.at("a").get<std::string>());
    const auto x = decompose_endomorphism(m, p, n, a);
    std::string text;
    for (const auto& [key, c] : x.terms)
        text += format_rat(c) + " w^" + std::to_string(key.first) + "#e_" + std::to_string(key.second) + "\n";
    Output out(fl);
    out.value("decomposition", to_json(x), text.empty() ? "0" : text);
    return out.finish();
}

int run_nu(const Flags& fl) {
    if (fl.n < 2) throw InvalidArgument("nu needs --n >= 2");
    const auto f = FieldDescriptor::make(fl.p, fl.n);
    const unsigned target = fl.m > 0 ? fl.m : fl.n - 1;
    if (target >= fl.n) throw InvalidArgument("--m must be below --n");
    Output out(fl);
    const Exp i = fl.i >= 0 ? index_flag(fl.i, "i", f) : 0;
    const auto image = nu_groupring(fl.n, target, e_basis(f, i));
    out.value("group_ring_image", to_json(image), group_ring_text(image));
    if (target == fl.n - 1) {
        const auto h = nu_h(fl.n, HElt::basis(f, i));
        out.value("h_image", to_json(h), "nu(e_" + std::to_string(i) + ") = " + rats_text(h.coords));
    }
    return out.finish();
}

int run_profinite(const Flags& fl) {
    if (fl.level > max_truncation_level(fl.p))
        throw CapExceeded("level " + std::to_string(fl.level) + " exceeds the truncation cap for p = " + std::to_string(fl.p),
                          max_truncation_level(fl.p));
    Output out(fl);
    for (auto& r : profinite_suite(fl.p, fl.level)) out.report(std::move(r));
    return out.finish();
}

int run_variants(const Flags& fl) {
    if (fl.n < 2) throw InvalidArgument("variants need --n >= 2");
    const Rat a = parse_rat(fl.a);
    validate_radicand(fl.p, a);
    Output out(fl);
    out.report(normal_complement_check(fl.p, fl.n));
    auto summary = json::array();
    std::string text;
    for (Exp i = 0; i < fl.p; ++i) {
        if (fl.i >= 0 && i != fl.i) continue;
        const auto h = h_variant(fl.p, fl.n, i, a);
        summary.push_back({{"i", i}, {"generator", to_json(h.generator)}, {"q_dimension", h.q_dimension()},
                           {"base_rank", h.base_rank()}, {"fixed_field_dimension", h.fixed_field.size()}});
        text += "H_" + std::to_string(i) + ": dim_Q " + std::to_string(h.q_dimension()) + ", rank " +
                std::to_string(h.base_rank()) + "\n";
        out.report(variant_action_check(fl.p, fl.n, i, a));
    }
    out.value("variants", summary, text);
    if (fl.i < 0) {
        out.report(variant_distinct_check(fl.p, fl.n, a));
        out.report(variant_untwisted_check(fl.p, fl.n, a));
    }
    if (fl.n >= 3) out.report(variant_nu_check(fl.p, fl.n, a));
    return out.finish();
}

int run_census(const Flags& fl, std::optional<double> budget) {
    EnumerationOptions options;
    options.budget_seconds = budget;
    Output out(fl);
    if (!fl.input.empty()) {
        const auto [gamma, delta] = instance_from_json(read_json_file(fl.input));
        const auto result = census(gamma, delta, options);
        out.value("census", to_json(result),
                  std::to_string(result.structures.size()) + " structures, " + std::to_string(result.almost_classical_count()) +
                      " almost classical");
        return out.finish();
    }
    const auto [gamma, delta] = radical_galois_group(fl.p, fl.n, fl.r);
    const auto result = census(gamma, delta, options);
    out.value("census", to_json(result),
              std::to_string(result.structures.size()) + " structures, " + std::to_string(result.almost_classical_count()) +
                  " almost classical");
    out.report(census_check(fl.p, fl.n, fl.r, options));
    return out.finish();
}

int run_verify_all(const Flags& fl, bool instance_given, std::optional<double> budget) {
    SuiteOptions options;
    if (instance_given) options.instances = {{fl.p, fl.n}};
    options.radicand = parse_rat(fl.a);
    options.seed = fl.seed;
    options.truncation_level = fl.level;
    options.enumeration.budget_seconds = budget;
    Output out(fl);
    verify_all(options, [&](const Report& r) {
        out.report(r);
        if (fl.format == "text" && !fl.out.empty()) std::cerr << report_line(r) << '\n';
    });
    return out.finish();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact arithmetic for the Hopf algebras acting on radical extensions"};
    app.require_subcommand(1);
    Flags fl;
    std::optional<double> budget;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--p", fl.p, "odd prime")->check(CLI::Range(Exp{3}, Exp{997}));
        sub->add_option("--n", fl.n, "level n >= 1")->check(CLI::Range(1u, 12u));
        sub->add_option("--format", fl.format, "json or text")->check(CLI::IsMember({"json", "text"}));
        sub->add_option("--out", fl.out, "write output to PATH");
        sub->add_flag("--no-timing", fl.no_timing, "report elapsed_ms as 0");
    };
    auto radicand = [&](CLI::App* sub) { sub->add_option("--a", fl.a, "radicand as num/den"); };

    auto* basis = app.add_subcommand("basis", "emit e_{n,i}");
    common(basis);
    basis->add_option("--i", fl.i, "index; all when omitted");

    auto* act_cmd = app.add_subcommand("act", "apply an element of H_n to an element of Q(w_n)");
    common(act_cmd);
    radicand(act_cmd);
    act_cmd->add_option("--i", fl.i, "act by e_i (default: the unit)");
    act_cmd->add_option("--k", fl.k, "act on w^k");
    act_cmd->add_option("--input", fl.input, "JSON {\"h\": [...], \"x\": {...}}");

    auto* smash = app.add_subcommand("smash", "smash product basis matrices and products");
    common(smash);
    radicand(smash);
    smash->add_option("--j", fl.j, "w exponent of the left factor");
    smash->add_option("--i", fl.i, "e index of the left factor");
    smash->add_option("--k", fl.k, "w exponent of the right factor");
    smash->add_option("--l", fl.l, "e index of the right factor");
    smash->add_option("--m", fl.m, "emit the Hom(Q(w_n), Q(w_m)) basis instead");
    smash->add_option("--seed", fl.seed, "seed for random product checks");
    smash->add_flag("--all", fl.all, "every basis matrix plus the isomorphism check");

    auto* decompose = app.add_subcommand("decompose", "write a matrix over the smash basis");
    common(decompose);
    decompose->add_option("--input", fl.input, "JSON {p, n, a, rows}")->required();

    auto* nu = app.add_subcommand("nu", "connecting maps between levels");
    common(nu);
    nu->add_option("--i", fl.i, "index of e_{n,i}");
    nu->add_option("--m", fl.m, "target group level (default n-1)");

    auto* profinite = app.add_subcommand("profinite", "coherence and fixed-ring truncation suite");
    common(profinite);
    profinite->add_option("--level", fl.level, "truncation level L")->check(CLI::Range(1u, 12u));

    auto* variants = app.add_subcommand("variants", "the Hopf algebras H_{n,i} and their checks");
    common(variants);
    radicand(variants);
    variants->add_option("--i", fl.i, "single variant index");

    auto* census_cmd = app.add_subcommand("census", "regular subgroups normalized by the Galois group");
    common(census_cmd);
    census_cmd->add_option("--r", fl.r, "base field Q(zeta_r)");
    census_cmd->add_option("--input", fl.input, "JSON {degree, gamma, delta} with generator image vectors");
    census_cmd->add_option("--budget", budget, "wall-clock budget in seconds");

    auto* verify = app.add_subcommand("verify-all", "full verification suite");
    common(verify);
    radicand(verify);
    verify->add_option("--seed", fl.seed, "seed for random product checks");
    verify->add_option("--level", fl.level, "truncation level L")->check(CLI::Range(1u, 12u));
    verify->add_option("--budget", budget, "wall-clock budget for each census");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*basis) return run_basis(fl);
        if (*act_cmd) return run_act(fl);
        if (*smash) return run_smash(fl);
        if (*decompose) return run_decompose(fl);
        if (*nu) return run_nu(fl);
        if (*profinite) return run_profinite(fl);
        if (*variants) return run_variants(fl);
        if (*census_cmd) {
            if (!fl.input.empty() && (census_cmd->count("--p") || census_cmd->count("--n") || census_cmd->count("--r")))
                throw InvalidArgument("--input excludes --n and --r");
            if (fl.r > fl.n) throw InvalidArgument("--r must not exceed --n");
            return run_census(fl, budget);
        }
        if (*verify) return run_verify_all(fl, verify->count("--p") > 0 || verify->count("--n") > 0, budget);
    } catch (const CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << '\n';
        return kCap;
    } catch (const InvalidArgument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const json::exception& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
