// Command-line frontend: builds slice ideals for a given array shape, runs
// the depth-zero certification pipeline, and exposes the Groebner, colon,
// and resolution machinery with text or JSON reports.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "slicecert/certify.hpp"
#include "slicecert/groebner.hpp"
#include "slicecert/resolution.hpp"
#include "slicecert/slice_family.hpp"
#include "slicecert/text_io.hpp"

using json = nlohmann::json;
using namespace slicecert;

namespace {

constexpr int kResolutionVarLimit = 6;

struct CliReport {
    std::string shape;
    std::string field = "q";
    Report checks;
    std::optional<long> pd;
    std::optional<std::pair<long, long>> support;  // multiplicity, distinct
    std::vector<std::string> lines;                // text-format payload
    json data;                                     // json-format payload
};

int emit(const CliReport& r, const std::string& format) {
    if (format == "json") {
        json j;
        j["shape"] = r.shape;
        j["field"] = r.field;
        j["checks"] = json::array();
        for (const auto& c : r.checks)
            j["checks"].push_back({{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
        j["pd"] = r.pd ? json(*r.pd) : json(nullptr);
        j["support"] = r.support ? json{{"multiplicity", r.support->first},
                                        {"distinct", r.support->second}}
                                 : json(nullptr);
        if (!r.data.is_null()) j["data"] = r.data;
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& line : r.lines) std::cout << line << "\n";
        for (const auto& c : r.checks) {
            std::cout << "check " << c.name << ": " << (c.pass ? "PASS" : "FAIL");
            if (!c.detail.empty()) std::cout << " (" << c.detail << ")";
            std::cout << "\n";
        }
        if (r.support)
            std::cout << "support: " << r.support->first << " with multiplicity, "
                      << r.support->second << " distinct\n";
        if (r.pd) std::cout << "pd = " << *r.pd << "\n";
    }
    return all_pass(r.checks) ? 0 : 1;
}

// "q" -> nullopt, "f<p>" -> p (prime, fits in 32 bits)
std::optional<unsigned> parse_field(const std::string& s) {
    if (s == "q") return std::nullopt;
    if (s.size() < 2 || s[0] != 'f') throw std::invalid_argument("field: expected q or f<p>");
    unsigned long p = 0;
    for (std::size_t i = 1; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i])))
            throw std::invalid_argument("field: expected q or f<p>");
        p = p * 10 + static_cast<unsigned long>(s[i] - '0');
        if (p > 0xffffffffUL) throw std::invalid_argument("field: characteristic too large");
    }
    if (!is_prime_u32(static_cast<unsigned>(p)))
        throw std::invalid_argument("field: " + std::to_string(p) + " is not prime");
    return static_cast<unsigned>(p);
}

MonomialOrder parse_order(const std::string& s) {
    return s == "lex" ? MonomialOrder::lex() : MonomialOrder::grevlex();
}

ColonMode parse_mode(const std::string& s) {
    return s == "groebner" ? ColonMode::Groebner : ColonMode::Exchange;
}

PolyFp to_fp(const PolyQ& f, unsigned p) {
    std::vector<PolyFp::Term> terms;
    for (const auto& t : f.terms()) terms.push_back({Fp::from_rational(t.coeff, p), t.mono});
    return PolyFp::from_terms(f.shape(), f.order(), std::move(terms));
}

Ideal<Fp> ideal_to_fp(const Ideal<Rational>& I, unsigned p) {
    std::vector<PolyFp> gens;
    for (const auto& g : I.generators()) gens.push_back(to_fp(g, p));
    return Ideal<Fp>(I.shape(), std::move(gens));
}

long formula_support(const Shape& shape) {
    long m = 0;
    int d = static_cast<int>(shape.dims());
    for (int i = 1; i < d; ++i) m += 2 * (shape.extent(i - 1) - 1);
    return m + shape.extent(d - 1);
}

void add_support(CliReport& rep, const Shape& shape) {
    SliceIdeal S = build_ideal(shape);
    auto [mult, distinct] = support_count(S.generators());
    rep.support = {mult, distinct};
    long expected = formula_support(shape);
    rep.checks.push_back({"support formula",
                          mult == expected,
                          "counted " + std::to_string(mult) + ", formula gives " +
                              std::to_string(expected)});
    bool cubic = true;
    for (int i = 1; i < static_cast<int>(shape.dims()); ++i)
        if (shape.extent(i) != shape.extent(0)) cubic = false;
    if (cubic) {
        long n = shape.extent(0), d = static_cast<long>(shape.dims());
        rep.lines.push_back("cubic case: 2(n-1)(d-1)+n = 2(" + std::to_string(n - 1) + ")(" +
                            std::to_string(d - 1) + ")+" + std::to_string(n) + " = " +
                            std::to_string(2 * (n - 1) * (d - 1) + n));
    }
}

template <typename K>
void print_basis(CliReport& rep, const GroebnerBasis<K>& G) {
    rep.lines.push_back("reduced basis, " + std::to_string(G.basis().size()) + " element(s):");
    json arr = json::array();
    for (const auto& g : G.basis()) {
        rep.lines.push_back("  " + g.str());
        arr.push_back(g.str());
    }
    rep.data["basis"] = arr;
}

void add_betti(CliReport& rep, const FreeResolution<Rational>& R, bool with_modules) {
    if (with_modules) {
        for (std::size_t k = 0; k < R.modules.size(); ++k) {
            std::string line = "F" + std::to_string(k) + ": rank " +
                               std::to_string(R.modules[k].rank()) + ", degrees";
            for (long d : R.modules[k].degrees) line += " " + std::to_string(d);
            rep.lines.push_back(line);
        }
        rep.lines.push_back(std::string("minimal: ") + (R.minimal ? "yes" : "no"));
    }
    if (!R.minimal) return;
    BettiTable B = betti(R);
    rep.lines.push_back("betti table:");
    std::istringstream grid(B.grid());
    std::string line;
    while (std::getline(grid, line)) rep.lines.push_back("  " + line);
    rep.pd = B.projdim();
    json arr = json::array();
    for (const auto& [ij, b] : B.entries)
        arr.push_back({{"i", ij.first}, {"j", ij.second}, {"beta", b}});
    rep.data["betti"] = arr;
}

FreeResolution<Rational> resolve_shape(const Shape& shape, std::size_t max_length,
                                       const MonomialOrder& ord) {
    if (shape.var_count() > kResolutionVarLimit)
        throw std::invalid_argument("resolve: direct resolution supported up to " +
                                    std::to_string(kResolutionVarLimit) + " variables");
    std::size_t limit =
        max_length > 0 ? max_length : static_cast<std::size_t>(shape.var_count()) + 1;
    return free_resolution(build_ideal(shape, ord).ideal(), limit, ord);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"slice-ideal construction and depth-zero certification"};
    app.require_subcommand(1);

    std::string shape_s, field_s = "q", order_s = "grevlex", mode_s = "exchange",
                format_s = "text", poly_s;
    std::size_t max_length = 0;
    int jobs = 1;
    unsigned long seed = 0;

    auto add_common = [&](CLI::App* sub, bool with_poly, bool poly_required) {
        sub->add_option("--shape", shape_s, "array shape, e.g. 2x3x2")->required();
        sub->add_option("--field", field_s, "coefficient field: q or f<p>");
        sub->add_option("--order", order_s, "monomial order")
            ->check(CLI::IsMember({"grevlex", "lex"}));
        sub->add_option("--mode", mode_s, "colon certification mode")
            ->check(CLI::IsMember({"exchange", "groebner"}));
        sub->add_option("--max-length", max_length, "resolution length cap (0 = automatic)");
        sub->add_option("--format", format_s, "output format")
            ->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--jobs", jobs, "parallel workers for independent checks")
            ->check(CLI::PositiveNumber);
        sub->add_option("--seed", seed, "seed echoed for reproducibility note");
        if (with_poly) {
            auto* opt = sub->add_option("poly", poly_s, "polynomial expression");
            if (poly_required) opt->required();
        }
    };

    add_common(app.add_subcommand("construct", "print generators and witness monomial"), false,
               false);
    add_common(app.add_subcommand("certify", "run the depth-zero certification pipeline"), false,
               false);
    add_common(app.add_subcommand("gb", "reduced Groebner basis of the slice ideal"), false,
               false);
    add_common(app.add_subcommand("member", "test ideal membership of a polynomial"), true, true);
    add_common(app.add_subcommand("colon", "colon ideal by a monomial, or by the maximal ideal"),
               true, false);
    add_common(app.add_subcommand("resolve", "minimal free resolution summary"), false, false);
    add_common(app.add_subcommand("betti", "Betti table of the minimal resolution"), false,
               false);
    add_common(app.add_subcommand("support", "monomial support counts of the generators"), false,
               false);
    add_common(app.add_subcommand("report-all", "certification, support, and resolution report"),
               false, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }
    const std::string cmd = app.get_subcommands().at(0)->get_name();

    try {
        Shape shape = Shape::parse(shape_s);
        std::optional<unsigned> p = parse_field(field_s);
        MonomialOrder ord = parse_order(order_s);
        ColonMode mode = parse_mode(mode_s);
        const bool gb_command = (cmd == "gb" || cmd == "member" || cmd == "colon");
        if (p && !gb_command)
            throw std::invalid_argument(
                "field: only q is supported here (the contraction pairing needs rationals)");

        CliReport rep;
        rep.shape = shape.str();
        rep.field = field_s;
        if (seed != 0) {
            rep.lines.push_back("seed: " + std::to_string(seed));
            rep.data["seed"] = seed;
        }

        if (cmd == "construct") {
            SliceIdeal S = build_ideal(shape, ord);
            rep.lines.push_back("shape " + shape.str() + ", " +
                                std::to_string(shape.var_count()) + " variables");
            json arr = json::array();
            for (const auto& g : S.generators()) {
                rep.lines.push_back("generator: " + format_poly(g));
                arr.push_back(format_poly(g));
            }
            Monomial s = witness_monomial(shape);
            rep.lines.push_back("witness: " + s.str());
            rep.data["generators"] = arr;
            rep.data["witness"] = s.str();
        } else if (cmd == "certify") {
            DepthZeroCertificate cert = certify_depth_zero(shape, mode, jobs);
            rep.checks = cert.all_checks();
            rep.lines.push_back("mode: " + std::string(colon_mode_name(cert.mode)));
            rep.lines.push_back(std::string("verdict: ") + (cert.verdict ? "pass" : "fail"));
            if (cert.verdict) rep.pd = ab_projdim(shape, cert);
            rep.data["mode"] = colon_mode_name(cert.mode);
            rep.data["verdict"] = cert.verdict;
        } else if (cmd == "gb") {
            Ideal<Rational> I = build_ideal(shape, ord).ideal();
            if (p)
                print_basis(rep, reduced_groebner(ideal_to_fp(I, *p), ord));
            else
                print_basis(rep, reduced_groebner(I, ord));
        } else if (cmd == "member") {
            if (p) {
                PolyFp f = parse_poly_fp(poly_s, shape, *p, ord);
                auto G = reduced_groebner(ideal_to_fp(build_ideal(shape, ord).ideal(), *p), ord);
                PolyFp nf = normal_form(f, G.basis(), ord);
                rep.checks.push_back({"membership", nf.is_zero(), "normal form: " + nf.str()});
            } else {
                PolyQ f = parse_poly(poly_s, shape, ord);
                auto G = reduced_groebner(build_ideal(shape, ord).ideal(), ord);
                PolyQ nf = normal_form(f, G.basis(), ord);
                rep.checks.push_back({"membership", nf.is_zero(), "normal form: " + nf.str()});
            }
        } else if (cmd == "colon") {
            auto run_colon = [&](auto ideal, auto witness_poly) {
                if (!poly_s.empty()) {
                    auto f = witness_poly(poly_s);
                    if (f.size() != 1 || !f.leading_coeff().is_one())
                        throw std::invalid_argument("colon: argument must be a monic monomial");
                    print_basis(rep, reduced_groebner(colon(ideal, f.leading_monomial(), ord), ord));
                } else {
                    auto C = colon_maximal(ideal, ord);
                    print_basis(rep, reduced_groebner(C, ord));
                    Monomial s = witness_monomial(shape);
                    auto sp = witness_poly(s.str());
                    bool in_colon = ideal_member(sp, C, ord);
                    bool in_ideal = ideal_member(sp, ideal, ord);
                    rep.checks.push_back({"witness in colon", in_colon, "s = " + s.str()});
                    rep.checks.push_back(
                        {"witness not in ideal", !in_ideal, "s = " + s.str()});
                }
            };
            if (p)
                run_colon(ideal_to_fp(build_ideal(shape, ord).ideal(), *p),
                          [&](const std::string& src) { return parse_poly_fp(src, shape, *p, ord); });
            else
                run_colon(build_ideal(shape, ord).ideal(),
                          [&](const std::string& src) { return parse_poly(src, shape, ord); });
        } else if (cmd == "resolve") {
            FreeResolution<Rational> R = resolve_shape(shape, max_length, ord);
            bool dd = true;
            for (std::size_t k = 0; k + 1 < R.diffs.size(); ++k)
                if (!R.diffs[k].multiply(R.diffs[k + 1]).is_zero()) dd = false;
            rep.checks.push_back({"complex property", dd, "consecutive composites vanish"});
            rep.checks.push_back({"resolution complete", !R.truncated,
                                  R.truncated ? "stopped at --max-length" : ""});
            add_betti(rep, R, true);
        } else if (cmd == "betti") {
            FreeResolution<Rational> R = resolve_shape(shape, max_length, ord);
            if (R.truncated)
                rep.checks.push_back({"resolution complete", false, "stopped at --max-length"});
            add_betti(rep, R, false);
        } else if (cmd == "support") {
            add_support(rep, shape);
        } else if (cmd == "report-all") {
            DepthZeroCertificate cert = certify_depth_zero(shape, mode, jobs);
            rep.checks = cert.all_checks();
            rep.lines.push_back("mode: " + std::string(colon_mode_name(cert.mode)));
            if (cert.verdict) rep.pd = ab_projdim(shape, cert);
            add_support(rep, shape);
            if (shape.var_count() <= kResolutionVarLimit) {
                FreeResolution<Rational> R = resolve_shape(shape, max_length, ord);
                long len = static_cast<long>(R.length());
                rep.checks.push_back({"resolution length matches pd",
                                      R.minimal && rep.pd && len == *rep.pd,
                                      "length " + std::to_string(len)});
                add_betti(rep, R, false);
            } else {
                rep.lines.push_back("resolution skipped (more than " +
                                    std::to_string(kResolutionVarLimit) + " variables)");
            }
        }
        return emit(rep, format_s);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
