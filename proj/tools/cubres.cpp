#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "cubres/characters.hpp"
#include "cubres/eisenstein.hpp"
#include "cubres/intmath.hpp"
#include "cubres/json_io.hpp"
#include "cubres/representations.hpp"
#include "cubres/solvability.hpp"
#include "cubres/symbols.hpp"
#include "cubres/verify.hpp"

namespace {

using namespace cubres;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitParse = 2;
constexpr int kExitIo = 3;

struct Args {
    std::string command;

    std::string alpha, pi, x, y, value;
    std::int64_t p = 0;
    std::int64_t order = 3;
    std::int64_t mod = 0;
    std::string table_kind;

    std::int64_t max = 1000;
    int jobs = 1;
    std::uint64_t seed = 0x5EED5EEDu;
    bool json_out = false;
    bool csv_out = false;
    bool oracle_only = false;
    bool paper_examples = false;
    std::string out_file;
};

void print_value(const json& j, bool json_out, const std::string& text) {
    if (json_out) {
        std::cout << j.dump() << "\n";
    } else {
        std::cout << text << "\n";
    }
}

int cmd_symbol(const Args& args) {
    const EisensteinInt alpha = parse_eisenstein(args.alpha);
    const EisensteinInt pi = parse_eisenstein(args.pi);
    const CubicValue v = cubic_symbol(alpha, pi);
    print_value(json(v), args.json_out, v.str());
    return kExitOk;
}

int cmd_cubic2(const Args& args) {
    const std::int64_t n = args.p;
    if (args.oracle_only) {
        const auto root = cubic2_oracle(n);
        json j{{"modulus", n},
               {"prime", n >= 2 && is_prime_u64(static_cast<std::uint64_t>(n))},
               {"solvable", root.has_value()},
               {"root", nullptr}};
        if (root) j["root"] = *root;
        std::string note = n >= 2 && is_prime_u64(static_cast<std::uint64_t>(n))
                               ? ""
                               : " (composite modulus, exhaustive search only)";
        std::string text = std::to_string(n) + ": " +
                           (root ? "solvable, root " + std::to_string(*root) : "unsolvable") + note;
        print_value(j, args.json_out, text);
        return kExitOk;
    }
    if (n < 2 || !is_prime_u64(static_cast<std::uint64_t>(n))) {
        throw std::domain_error(
            "cubic2: the representation criterion requires a prime modulus; "
            "use --oracle-only for an exhaustive search");
    }
    const Cubic2Verdict v = cubic2_full(n);
    std::string text = std::to_string(n) + ": " + (v.by_oracle ? "solvable" : "unsolvable");
    if (v.root) text += ", root " + std::to_string(*v.root);
    text += " (rep=" + std::to_string(v.by_representation ? 1 : 0) +
            " sym=" + std::to_string(v.by_symbol ? 1 : 0) +
            " oracle=" + std::to_string(v.by_oracle ? 1 : 0) + ")";
    print_value(json(v), args.json_out, text);
    return kExitOk;
}

int cmd_represent(const Args& args) {
    const std::int64_t p = args.p;
    const NormFormRep nf = solve_norm_form(p);
    const FourPRep fp = solve_4p(p);
    const auto p27 = solve_p_27(p);
    json j{{"p", p}, {"norm_form", nf}, {"four_p", fp}, {"p27", nullptr}};
    if (p27) j["p27"] = *p27;
    std::string text = "p = a^2 - a*b + b^2: (a,b) = (" + std::to_string(nf.a) + "," +
                       std::to_string(nf.b) + ")\n";
    text += "4p = A^2 + 27*B^2: (A,B) = (" + std::to_string(fp.A) + "," + std::to_string(fp.B) + ")\n";
    text += "p = C^2 + 27*D^2: ";
    text += p27 ? "(C,D) = (" + std::to_string(p27->C) + "," + std::to_string(p27->D) + ")"
                : std::string("none");
    print_value(j, args.json_out, text);
    return kExitOk;
}

int cmd_quad2(const Args& args) {
    const std::int64_t p = args.p;
    const QuadCase qc = gauss_four_case(p);
    const int formula = quad_char_of_2(p);
    json j{{"p", p}, {"case", qc}, {"formula", formula}};
    std::string text = std::string(qc.plus2 > 0 ? "residue" : "nonresidue") + " (case 8n+" +
                       std::to_string(qc.residue_class) + ")\n";
    text += std::string("-2: ") + (qc.minus2 > 0 ? "residue" : "nonresidue") + "\n";
    text += "formula (-1)^((p^2-1)/8) = " + std::to_string(formula);
    print_value(j, args.json_out, text);
    return kExitOk;
}

int cmd_sums(const Args& args) {
    const std::int64_t p = args.p;
    const MultiplicativeCharacter chi = MultiplicativeCharacter::build(p, args.order);
    const std::int64_t cs = char_sum(chi);
    const std::complex<double> g = gauss_sum(chi, 1);
    const double g2 = std::norm(g);
    json j{{"p", p}, {"order", args.order}, {"char_sum", cs}, {"gauss_abs_squared", g2}};
    std::string text = "char_sum = " + std::to_string(cs) + "\n";
    text += "|g(χ)|^2 = " + std::to_string(g2) + " (p = " + std::to_string(p) + ")";
    if (args.order == 3) {
        const EisensteinInt jac = jacobi_sum_cubic(chi, chi);
        const bool rel = jacobi_gauss_relation_check(chi, chi);
        j["jacobi"] = jac;
        j["jacobi_norm"] = static_cast<std::int64_t>(norm(jac));
        j["relation_check"] = rel;
        text += "\nJ(χ,χ) = " + to_string(jac) + ", norm = " + u128_to_string(norm(jac));
        text += std::string("\nrelation J = g(χ)g(λ)/g(χλ): ") + (rel ? "true" : "false");
    } else if (args.order > 2) {
        const bool rel = jacobi_gauss_relation_check(chi, chi);
        j["relation_check"] = rel;
        text += std::string("\nrelation J = g(χ)g(λ)/g(χλ): ") + (rel ? "true" : "false");
    }
    print_value(j, args.json_out, text);
    return kExitOk;
}

int cmd_table(const Args& args) {
    if (args.table_kind != "cubes") {
        throw std::invalid_argument("table: unknown kind '" + args.table_kind + "' (expected: cubes)");
    }
    if (args.mod < 1) throw std::domain_error("table: --mod must be positive");
    const auto rows = cube_table(args.mod);
    if (args.json_out) {
        json j{{"mod", args.mod}, {"cubes", rows}};
        std::cout << j.dump() << "\n";
        return kExitOk;
    }
    for (std::size_t t = 0; t < rows.size(); ++t) {
        std::cout << t << "^3 ≡ " << rows[t] << " (mod " << args.mod << ")\n";
    }
    return kExitOk;
}

int cmd_split(const Args& args) {
    const auto [pi, pibar] = split_rational_prime(args.p);
    json j{{"p", args.p}, {"pi", pi}, {"conj", pibar}};
    print_value(j, args.json_out,
                std::to_string(args.p) + " = (" + to_string(pi) + ")(" + to_string(pibar) + ")");
    return kExitOk;
}

int cmd_norm(const Args& args) {
    const EisensteinInt x = parse_eisenstein(args.value);
    json j{{"value", x}, {"norm", u128_to_string(norm(x))}};
    print_value(j, args.json_out, "norm(" + to_string(x) + ") = " + u128_to_string(norm(x)));
    return kExitOk;
}

int cmd_primary(const Args& args) {
    const EisensteinInt x = parse_eisenstein(args.value);
    const auto [unit, primary] = primary_associate(x);
    json j{{"value", x}, {"unit", unit}, {"primary", primary}};
    print_value(j, args.json_out,
                "unit = " + to_string(unit) + ", primary = " + to_string(primary));
    return kExitOk;
}

int cmd_gcd(const Args& args) {
    const EisensteinInt x = parse_eisenstein(args.x);
    const EisensteinInt y = parse_eisenstein(args.y);
    const EisensteinInt g = gcd(x, y);
    json j{{"x", x}, {"y", y}, {"gcd", g}};
    print_value(j, args.json_out, "gcd = " + to_string(g));
    return kExitOk;
}

int cmd_verify(const Args& args) {
    VerifyOptions opts;
    opts.max = args.max;
    opts.jobs = args.jobs;
    opts.seed = args.seed;
    opts.paper_examples = args.paper_examples;
    const VerifyReport report = run_verify(opts);

    std::ofstream file;
    std::ostream* os = &std::cout;
    if (!args.out_file.empty()) {
        file.open(args.out_file);
        if (!file) {
            std::cerr << "error: cannot open output file " << args.out_file << "\n";
            return kExitIo;
        }
        os = &file;
    }
    if (args.json_out) {
        write_json_lines(report, *os);
    } else {
        write_csv(report, *os);
    }
    os->flush();
    if (!*os) {
        std::cerr << "error: writing the report failed\n";
        return kExitIo;
    }
    std::cerr << render_summary(report) << "\n";
    return report.has_failures() ? kExitDomain : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Eisenstein arithmetic, residue characters, and the cubic character of 2"};
    app.require_subcommand(1);
    Args args;

    auto* symbol = app.add_subcommand("symbol", "cubic residue character (alpha/pi)_3");
    symbol->add_option("--alpha", args.alpha, "alpha as 'a,b' or a bare integer")->required();
    symbol->add_option("--pi", args.pi, "modulus as 'a,b' or a bare integer")->required();
    symbol->add_flag("--json", args.json_out, "JSON output");

    auto* cubic2 = app.add_subcommand("cubic2", "solvability of x^3 ≡ 2 (mod n)");
    cubic2->add_option("modulus", args.p, "modulus")->required();
    cubic2->add_flag("--oracle-only", args.oracle_only, "exhaustive search only (allows composites)");
    cubic2->add_flag("--json", args.json_out, "JSON output");

    auto* represent = app.add_subcommand("represent", "quadratic-form representations of p");
    represent->add_option("p", args.p, "prime ≡ 1 (mod 3)")->required();
    represent->add_flag("--json", args.json_out, "JSON output");

    auto* quad2 = app.add_subcommand("quad2", "quadratic character of ±2 mod p");
    quad2->add_option("p", args.p, "odd prime")->required();
    quad2->add_flag("--json", args.json_out, "JSON output");

    auto* sums = app.add_subcommand("sums", "character, Gauss, and Jacobi sums");
    sums->add_option("--p", args.p, "prime")->required();
    sums->add_option("--order", args.order, "character order (divides p-1)")->capture_default_str();
    sums->add_flag("--json", args.json_out, "JSON output");

    auto* table = app.add_subcommand("table", "value tables");
    table->add_option("kind", args.table_kind, "table kind (cubes)")->required();
    table->add_option("--mod", args.mod, "modulus")->required();
    table->add_flag("--json", args.json_out, "JSON output");

    auto* split = app.add_subcommand("split", "split p into primary Eisenstein primes");
    split->add_option("p", args.p, "prime ≡ 1 (mod 3)")->required();
    split->add_flag("--json", args.json_out, "JSON output");

    auto* norm_cmd = app.add_subcommand("norm", "norm of an Eisenstein integer");
    norm_cmd->add_option("value", args.value, "'a,b' or a bare integer")->required();
    norm_cmd->add_flag("--json", args.json_out, "JSON output");

    auto* primary = app.add_subcommand("primary", "primary associate and the unit that reaches it");
    primary->add_option("value", args.value, "'a,b' or a bare integer")->required();
    primary->add_flag("--json", args.json_out, "JSON output");

    auto* gcd_cmd = app.add_subcommand("gcd", "normalized Euclidean gcd");
    gcd_cmd->add_option("--x", args.x, "'a,b' or a bare integer")->required();
    gcd_cmd->add_option("--y", args.y, "'a,b' or a bare integer")->required();
    gcd_cmd->add_flag("--json", args.json_out, "JSON output");

    auto* verify = app.add_subcommand("verify", "range verification with machine-readable report");
    verify->add_option("--max", args.max, "verify all primes <= max")->capture_default_str();
    verify->add_option("--jobs", args.jobs, "worker threads")->capture_default_str();
    verify->add_option("--seed", args.seed, "seed for randomized spot checks")->capture_default_str();
    verify->add_flag("--json", args.json_out, "JSON-lines output (default: CSV)");
    verify->add_flag("--csv", args.csv_out, "CSV output (the default)");
    verify->add_flag("--paper-examples", args.paper_examples, "include the worked-example records");
    verify->add_option("--out", args.out_file, "write the report to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitParse;
    }

    try {
        if (symbol->parsed()) return cmd_symbol(args);
        if (cubic2->parsed()) return cmd_cubic2(args);
        if (represent->parsed()) return cmd_represent(args);
        if (quad2->parsed()) return cmd_quad2(args);
        if (sums->parsed()) return cmd_sums(args);
        if (table->parsed()) return cmd_table(args);
        if (split->parsed()) return cmd_split(args);
        if (norm_cmd->parsed()) return cmd_norm(args);
        if (primary->parsed()) return cmd_primary(args);
        if (gcd_cmd->parsed()) return cmd_gcd(args);
        if (verify->parsed()) return cmd_verify(args);
        std::cerr << "error: no subcommand\n";
        return kExitParse;
    } catch (const std::invalid_argument& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitDomain;
    }
}
