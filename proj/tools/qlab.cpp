// quandle-lab command line: quandle checks, coloring counts, homology and
// cocycle computations, diagram state sums, closed forms, and the Gauss-sum
// invariant. Output is byte-deterministic for fixed inputs.
//
// Exit codes: 0 success, 1 domain error (violated precondition),
// 2 structural error (malformed input, unusable flags).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qlab/closed_forms.hpp"
#include "qlab/cocycles.hpp"
#include "qlab/diagram.hpp"
#include "qlab/errors.hpp"
#include "qlab/gauss_sum.hpp"
#include "qlab/homology.hpp"
#include "qlab/io.hpp"
#include "qlab/presentation.hpp"
#include "qlab/quandle.hpp"
#include "qlab/state_sum.hpp"

namespace {

enum class Format { pretty, vector, machine };

Format parse_format(const std::string& s) {
    if (s == "pretty") return Format::pretty;
    if (s == "vector") return Format::vector;
    if (s == "machine") return Format::machine;
    throw qlab::structural_error("unknown output format '" + s + "'");
}

// "R3", "R5", ... build the dihedral quandle; anything else is a table file.
qlab::FiniteQuandle resolve_quandle(const std::string& spec) {
    if (spec.size() >= 2 && spec[0] == 'R' &&
        spec.find_first_not_of("0123456789", 1) == std::string::npos) {
        const int p = std::stoi(spec.substr(1));
        return qlab::dihedral(p);
    }
    return qlab::load_quandle(spec);
}

std::size_t basis_limit_from_env() {
    if (const char* env = std::getenv("QUANDLE_LAB_BASIS_LIMIT")) {
        try {
            const long long v = std::stoll(env);
            if (v > 0) return static_cast<std::size_t>(v);
        } catch (const std::exception&) {
        }
        throw qlab::structural_error("QUANDLE_LAB_BASIS_LIMIT must be a positive integer");
    }
    return qlab::kDefaultBasisLimit;
}

template <class Coeff>
std::string poly_pretty(const std::vector<Coeff>& coeffs) {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        if (!first) out << " + ";
        if (i == 0) {
            out << coeffs[i];
        } else {
            if (coeffs[i] != 1) out << coeffs[i];
            out << "t";
            if (i > 1) out << "^" << i;
        }
        first = false;
    }
    if (first) out << "0";
    return out.str();
}

template <class Coeff>
std::string poly_vector(const std::vector<Coeff>& coeffs) {
    std::ostringstream out;
    for (std::size_t i = 0; i < coeffs.size(); ++i) out << (i ? " " : "") << coeffs[i];
    return out.str();
}

template <class Coeff>
void print_poly(const std::vector<Coeff>& coeffs, Format format, const std::string& key) {
    switch (format) {
    case Format::pretty:
        std::cout << poly_vector(coeffs) << "\n" << poly_pretty(coeffs) << "\n";
        break;
    case Format::vector:
        std::cout << poly_vector(coeffs) << "\n";
        break;
    case Format::machine:
        std::cout << key << "=" << poly_vector(coeffs) << "\n";
        break;
    }
}

std::vector<int> parse_int_list(const std::string& csv, const std::string& what) {
    std::vector<int> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            out.push_back(std::stoi(item));
        } catch (const std::exception&) {
            throw qlab::structural_error("cannot parse " + what + " list '" + csv + "'");
        }
    }
    if (out.empty()) throw qlab::structural_error(what + " list is empty");
    return out;
}

qlab::SigmaExpression parse_sigma_expr(const std::string& expr) {
    // atoms separated by '#': "ribbon:<h>", "spun-torus", "turned-spun-torus",
    // "custom:<name>:<value>"
    qlab::SigmaExpression e;
    std::stringstream ss(expr);
    std::string item;
    while (std::getline(ss, item, '#')) {
        const auto begin = item.find_first_not_of(" \t");
        if (begin == std::string::npos) continue;
        const auto end = item.find_last_not_of(" \t");
        const std::string atom = item.substr(begin, end - begin + 1);
        if (atom.rfind("ribbon:", 0) == 0) {
            try {
                e.factors.push_back(qlab::RibbonGenus{std::stoi(atom.substr(7))});
            } catch (const std::exception&) {
                throw qlab::structural_error("cannot parse ribbon atom '" + atom + "'");
            }
        } else if (atom == "spun-torus") {
            e.factors.push_back(qlab::SpunTorus{});
        } else if (atom == "turned-spun-torus") {
            e.factors.push_back(qlab::TurnedSpunTorus{});
        } else if (atom.rfind("custom:", 0) == 0) {
            const auto colon = atom.find(':', 7);
            if (colon == std::string::npos)
                throw qlab::structural_error("custom atom needs 'custom:<name>:<value>'");
            try {
                e.factors.push_back(qlab::Custom{atom.substr(7, colon - 7),
                                                 std::stoll(atom.substr(colon + 1))});
            } catch (const std::exception&) {
                throw qlab::structural_error("cannot parse custom atom '" + atom + "'");
            }
        } else {
            throw qlab::structural_error("unknown sigma atom '" + atom + "'");
        }
    }
    return e;
}

int run(int argc, char** argv) {
    CLI::App app{"quandle-lab: quandle invariants of knots and surface-knots"};
    app.require_subcommand(1);
    std::string format_name = "pretty";
    app.add_option("--format", format_name, "output format: pretty|vector|machine")
        ->capture_default_str();

    // check-quandle
    auto* cmd_check = app.add_subcommand("check-quandle", "check the quandle axioms on a table");
    std::string check_spec;
    cmd_check->add_option("--quandle", check_spec, "table file or R<p>")->required();

    // colorings
    auto* cmd_col = app.add_subcommand("colorings", "enumerate colorings of a presentation");
    std::string col_pres, col_quandle;
    bool col_count_only = false;
    cmd_col->add_option("--presentation", col_pres, "presentation file")->required();
    cmd_col->add_option("--quandle", col_quandle, "table file or R<p>")->required();
    cmd_col->add_flag("--count-only", col_count_only, "print only the number of colorings");

    // homology
    auto* cmd_hom = app.add_subcommand("homology", "quandle/rack homology by integer SNF");
    std::string hom_quandle, hom_theory = "Q", hom_matrix_out;
    int hom_n = 3;
    cmd_hom->add_option("--quandle", hom_quandle, "table file or R<p>")->required();
    cmd_hom->add_option("--n", hom_n, "degree")->required();
    cmd_hom->add_option("--theory", hom_theory, "R or Q")->capture_default_str();
    cmd_hom->add_option("--matrix-out", hom_matrix_out,
                        "write boundary matrices d_n, d_{n+1} as <prefix>.dn.txt, <prefix>.dn1.txt");

    // cocycles
    auto* cmd_coc = app.add_subcommand("cocycles", "cocycle/coboundary spaces over Z_q");
    std::string coc_quandle;
    int coc_q = 0, coc_n = 3;
    bool coc_select = false;
    cmd_coc->add_option("--quandle", coc_quandle, "table file or R<p>")->required();
    cmd_coc->add_option("--q", coc_q, "prime coefficient modulus")->required();
    cmd_coc->add_option("--n", coc_n, "degree")->capture_default_str();
    cmd_coc->add_flag("--select-distinguished", coc_select,
                      "print the distinguished 3-cocycle of R_p (requires --quandle R<p>, q = p, n = 3)");

    // invariant
    auto* cmd_inv = app.add_subcommand("invariant", "cocycle state sum of a diagram");
    std::string inv_diagram, inv_quandle, inv_cocycle;
    bool inv_distinguished = false, inv_check_cycle = false;
    cmd_inv->add_option("--diagram", inv_diagram, "diagram file")->required();
    cmd_inv->add_option("--quandle", inv_quandle, "table file or R<p>")->required();
    cmd_inv->add_option("--cocycle", inv_cocycle, "cochain file");
    cmd_inv->add_flag("--distinguished", inv_distinguished,
                      "use the distinguished 3-cocycle of R_p instead of a file");
    cmd_inv->add_flag("--check-cycle", inv_check_cycle,
                      "verify the fundamental cycle against the quandle first");

    // closed-form
    auto* cmd_cf = app.add_subcommand("closed-form", "closed form of Phi_p(F_{p,variant})");
    int cf_p = 0, cf_variant = 1;
    cmd_cf->add_option("--p", cf_p, "odd prime")->required();
    cmd_cf->add_option("--variant", cf_variant, "1 or 2")->capture_default_str();

    // prop31
    auto* cmd_p31 = app.add_subcommand("prop31", "constant-term check for p = 3 (mod 4)");
    int p31_p = 0;
    cmd_p31->add_option("--p", p31_p, "odd prime with p = 3 (mod 4)")->required();

    // distinguish
    auto* cmd_dis = app.add_subcommand("distinguish", "separate two connected-sum words F_I, F_I'");
    std::string dis_primes, dis_I, dis_Iprime;
    cmd_dis->add_option("--primes", dis_primes, "comma-separated odd primes")->required();
    cmd_dis->add_option("--I", dis_I, "comma-separated exponents in {1,2}")->required();
    cmd_dis->add_option("--Iprime", dis_Iprime, "comma-separated exponents in {1,2}")->required();

    // gauss-sum
    auto* cmd_gs = app.add_subcommand("gauss-sum", "multiplicative Gauss-sum invariant");
    std::string gs_expr;
    int gs_genus_pair = 0;
    cmd_gs->add_option("--expr", gs_expr,
                       "atoms joined by '#': ribbon:<h>, spun-torus, turned-spun-torus, custom:<name>:<value>");
    cmd_gs->add_option("--genus-pair", gs_genus_pair, "report the genus-g pair values 2^g vs 0");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    const Format format = parse_format(format_name);
    const std::size_t basis_limit = basis_limit_from_env();

    if (cmd_check->parsed()) {
        qlab::AxiomReport report;
        std::string label;
        int size = 0;
        if (check_spec.size() >= 2 && check_spec[0] == 'R' &&
            check_spec.find_first_not_of("0123456789", 1) == std::string::npos) {
            const qlab::FiniteQuandle x = qlab::dihedral(std::stoi(check_spec.substr(1)));
            label = x.label();
            size = x.size();
            report = qlab::check_axioms(x.table());
        } else {
            std::ifstream in(check_spec);
            if (!in) throw qlab::structural_error("cannot open '" + check_spec + "'");
            const qlab::RawQuandleFile raw = qlab::read_quandle_table(in);
            label = raw.name;
            size = static_cast<int>(raw.table.size());
            report = qlab::check_axioms(raw.table);
        }
        if (format == Format::machine) {
            std::cout << "quandle=" << label << "\nsize=" << size << "\n"
                      << "axioms=" << (report.pass() ? "pass" : report.message()) << "\n";
        } else {
            std::cout << "quandle " << label << " size " << size << "\n"
                      << "axioms: " << report.message() << "\n";
        }
        return report.pass() ? 0 : 1;
    }

    if (cmd_col->parsed()) {
        const qlab::QuandlePresentation p = qlab::load_presentation(col_pres);
        const qlab::FiniteQuandle x = resolve_quandle(col_quandle);
        const auto colorings = qlab::enumerate_colorings(p, x);
        if (format == Format::machine)
            std::cout << "colorings=" << colorings.size() << "\n";
        else
            std::cout << "colorings " << colorings.size() << "\n";
        if (!col_count_only)
            for (const auto& c : colorings) {
                for (std::size_t g = 0; g < p.generators.size(); ++g)
                    std::cout << (g ? " " : "") << p.generators[g] << "=" << c.values[g];
                std::cout << "\n";
            }
        return 0;
    }

    if (cmd_hom->parsed()) {
        const qlab::FiniteQuandle x = resolve_quandle(hom_quandle);
        qlab::Theory theory;
        if (hom_theory == "Q") theory = qlab::Theory::quandle;
        else if (hom_theory == "R") theory = qlab::Theory::rack;
        else throw qlab::structural_error("--theory must be R or Q");
        const auto h = qlab::homology(x, hom_n, theory, basis_limit);
        if (!hom_matrix_out.empty()) {
            for (const auto& [suffix, deg] :
                 std::vector<std::pair<std::string, int>>{{".dn.txt", hom_n}, {".dn1.txt", hom_n + 1}}) {
                std::ofstream out(hom_matrix_out + suffix);
                if (!out) throw qlab::structural_error("cannot write '" + hom_matrix_out + suffix + "'");
                qlab::write_matrix_triplets(out, qlab::boundary_matrix<qlab::BigInt>(x, deg, theory));
            }
        }
        const std::string name = std::string("H^") + (theory == qlab::Theory::quandle ? "Q" : "R") +
                                 "_" + std::to_string(hom_n);
        if (format == Format::machine)
            std::cout << "group=" << h.to_string() << "\n";
        else
            std::cout << name << "(" << x.label() << ") = " << h.to_string() << "\n";
        return 0;
    }

    if (cmd_coc->parsed()) {
        const qlab::FiniteQuandle x = resolve_quandle(coc_quandle);
        const auto sol = qlab::solve_cocycles(x, coc_q, coc_n, basis_limit);
        if (format == Format::machine)
            std::cout << "dimZ=" << sol.cocycle_basis.size() << "\ndimB=" << sol.coboundary_basis.size()
                      << "\ndimH=" << sol.h_dim << "\n";
        else
            std::cout << "dim Z^" << coc_n << "_Q(" << x.label() << ";Z_" << coc_q << ") = "
                      << sol.cocycle_basis.size() << "\n"
                      << "dim B^" << coc_n << " = " << sol.coboundary_basis.size() << "\n"
                      << "dim H^" << coc_n << " = " << sol.h_dim << "\n";
        if (coc_select) {
            if (coc_n != 3 || coc_q != x.size() || x.label() != "R" + std::to_string(x.size()))
                throw qlab::domain_error("--select-distinguished requires --quandle R<p>, --q p, --n 3");
            qlab::write_cochain(std::cout, qlab::select_distinguished_cocycle(coc_q, basis_limit),
                                x.label());
        }
        return 0;
    }

    if (cmd_inv->parsed()) {
        const qlab::DiagramDatum d = qlab::load_diagram(inv_diagram);
        const qlab::FiniteQuandle x = resolve_quandle(inv_quandle);
        if (inv_cocycle.empty() == !inv_distinguished)
            throw qlab::structural_error("invariant needs exactly one of --cocycle or --distinguished");
        const qlab::Cochain theta = inv_distinguished
                                        ? qlab::select_distinguished_cocycle(x.size(), basis_limit)
                                        : qlab::load_cochain(inv_cocycle, x);
        if (inv_check_cycle && !qlab::verify_cycle(d, x))
            throw qlab::domain_error("fundamental cycle of '" + d.name + "' is not a cycle over " + x.label());
        const auto value = qlab::phi(d, x, theta);
        if (format == Format::machine) std::cout << "colorings=" << value.mass() << "\n";
        else std::cout << "colorings " << value.mass() << "\n";
        print_poly(value.coeffs, format, "phi");
        return 0;
    }

    if (cmd_cf->parsed()) {
        const auto v = qlab::phi_closed_form(cf_p, cf_variant);
        print_poly(v.coeffs, format, "phi");
        if (format == Format::machine)
            std::cout << "constant_term=" << qlab::constant_term(v) << "\n";
        else
            std::cout << "constant term " << qlab::constant_term(v) << "\n";
        return 0;
    }

    if (cmd_p31->parsed()) {
        const auto r = qlab::verify_prop31(p31_p);
        if (format == Format::machine) {
            std::cout << "p=" << r.p << "\npairs_sum_zero=" << r.pairs_sum_zero
                      << "\npairs_diff_zero=" << r.pairs_diff_zero << "\nct1=" << r.constant_term_1
                      << "\nct2=" << r.constant_term_2 << "\npass=" << (r.pass ? 1 : 0) << "\n";
        } else {
            std::cout << "p " << r.p << "\n"
                      << "pairs with 2(i^2+j^2)=0: " << r.pairs_sum_zero << "\n"
                      << "pairs with 2(i^2-j^2)=0: " << r.pairs_diff_zero << "\n"
                      << "constant term variant 1: " << r.constant_term_1 << "\n"
                      << "constant term variant 2: " << r.constant_term_2 << "\n"
                      << "check: " << (r.pass ? "pass" : "fail") << "\n";
        }
        return r.pass ? 0 : 1;
    }

    if (cmd_dis->parsed()) {
        const auto primes = parse_int_list(dis_primes, "primes");
        const auto I = parse_int_list(dis_I, "I");
        const auto Ip = parse_int_list(dis_Iprime, "Iprime");
        const auto v = qlab::distinguish_pair(I, Ip, primes);
        if (format == Format::machine) {
            std::cout << "j=" << v.j << "\np=" << v.p << "\nct_I=" << v.constant_term_I
                      << "\nct_Iprime=" << v.constant_term_Iprime
                      << "\ndistinguished=" << (v.distinguished ? 1 : 0) << "\nverdict=" << v.verdict
                      << "\n";
        } else {
            std::cout << "separating index j = " << v.j << " (p = " << v.p << ")\n"
                      << "constant term of Phi_" << v.p << "(F_I)  = " << v.constant_term_I << "\n"
                      << "constant term of Phi_" << v.p << "(F_I') = " << v.constant_term_Iprime << "\n"
                      << "verdict: " << v.verdict << "\n";
        }
        return v.distinguished ? 0 : 1;
    }

    if (cmd_gs->parsed()) {
        if (gs_genus_pair > 0) {
            const auto v = qlab::distinguish_genus_g_pair(gs_genus_pair);
            if (format == Format::machine)
                std::cout << "g=" << v.genus << "\nsigma_spun=" << v.sigma_spun
                          << "\nsigma_turned=" << v.sigma_turned << "\nverdict=" << v.verdict << "\n";
            else
                std::cout << "sigma(G # T(k))  = " << v.sigma_spun << "\n"
                          << "sigma(G # T~(k)) = " << v.sigma_turned << "\n"
                          << "verdict: " << v.verdict << "\n";
            return 0;
        }
        if (gs_expr.empty())
            throw qlab::structural_error("gauss-sum needs --expr or --genus-pair");
        const auto value = qlab::sigma_value(parse_sigma_expr(gs_expr));
        if (format == Format::machine) std::cout << "sigma=" << value << "\n";
        else std::cout << value << "\n";
        return 0;
    }

    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const qlab::domain_error& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return 1;
    } catch (const qlab::computation_error& e) {
        std::cerr << "computation error: " << e.what() << "\n";
        return 1;
    } catch (const qlab::structural_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
