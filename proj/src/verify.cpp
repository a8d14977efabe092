#include "cubres/verify.hpp"

#include <atomic>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "cubres/characters.hpp"
#include "cubres/intmath.hpp"
#include "cubres/json_io.hpp"

namespace cubres {

namespace {

constexpr std::int64_t kBruteSquareLimit = 5000;  // full square-scan bound

std::mt19937_64 rng_for_prime(std::uint64_t seed, std::int64_t p) {
    return std::mt19937_64(seed ^ (0x9E3779B97F4A7C15ull * static_cast<std::uint64_t>(p)));
}

void check_split_prime(PrimeRecord& rec, std::uint64_t seed) {
    const std::int64_t p = rec.p;
    auto fail = [&rec](const std::string& what) { rec.failures.push_back(what); };

    const NormFormRep nf = solve_norm_form(p);
    rec.norm_form = nf;
    if (nf.a * nf.a - nf.a * nf.b + nf.b * nf.b != p) fail("norm_form_value");
    if (!(nf.a > nf.b && nf.b > 0)) fail("norm_form_shape");

    if (p <= kCharTableBudget) {
        const NormFormRep jp = solve_norm_form_via_jacobi(p);
        if (!form_equivalent(jp, nf)) fail("jacobi_pair_mismatch");
    }

    try {
        const FourPRep fp = solve_4p(p);
        rec.four_p = fp;
        if (fp.A * fp.A + 27 * fp.B * fp.B != 4 * p) fail("four_p_value");
        if (((fp.A * fp.A) % 27 + 27) % 27 != (4 * p) % 27) fail("four_p_mod27");
        if (!parity_link_check(p)) fail("parity_link");
    } catch (const std::logic_error&) {
        fail("four_p_not_unique");
    }
    rec.p27 = solve_p_27(p);

    const auto [pi, pibar] = split_rational_prime(p);
    if (pi * pibar != EisensteinInt(p, 0) || !is_primary(pi)) fail("split_product");
    if (!lemma14_check(pi)) fail("lemma14");

    if (!(rec.cubic2.by_representation == rec.cubic2.by_symbol &&
          rec.cubic2.by_symbol == rec.cubic2.by_oracle)) {
        fail("cubic2_disagreement");
    }

    auto rng = rng_for_prime(seed, p);
    std::uniform_int_distribution<std::int64_t> coord(-p, p);
    for (int trial = 0; trial < 2; ++trial) {
        const EisensteinInt alpha(coord(rng), coord(rng));
        const EisensteinInt beta(coord(rng), coord(rng));
        if (!cubic_symbol_multiplicativity_check(alpha, beta, pi)) {
            fail("symbol_multiplicativity");
            break;
        }
    }
    for (int trial = 0; trial < 4; ++trial) {
        const EisensteinInt alpha(coord(rng), coord(rng));
        if (divides(pi, alpha)) continue;
        if (!flt_analogue_check(alpha, pi)) fail("flt_analogue");
        break;
    }
}

PrimeRecord build_prime_record(std::int64_t p, const VerifyOptions& opts) {
    PrimeRecord rec;
    rec.p = p;
    try {
        rec.cls = classify_rational_prime(p);
        rec.cubic2 = cubic2_full(p);
        if (rec.cubic2.root) {
            const std::uint64_t m = static_cast<std::uint64_t>(p);
            const std::uint64_t x = static_cast<std::uint64_t>(*rec.cubic2.root);
            if (mul_mod(mul_mod(x, x, m), x, m) != 2 % m) rec.failures.push_back("witness_invalid");
        }
        switch (rec.cls) {
            case PrimeClassification::split:
                check_split_prime(rec, opts.seed);
                break;
            case PrimeClassification::inert:
                if (!inert_cube_bijection_check(p)) rec.failures.push_back("cube_bijection");
                if (p != 2 && !lemma14_check(EisensteinInt(p, 0))) rec.failures.push_back("lemma14");
                if (!(rec.cubic2.by_representation && rec.cubic2.by_symbol && rec.cubic2.by_oracle)) {
                    rec.failures.push_back("prop13_violation");
                }
                break;
            case PrimeClassification::ramified:
                if (!rec.cubic2.by_oracle) rec.failures.push_back("ramified_oracle");
                break;
        }
        if (p > 2) {
            rec.quad2 = gauss_four_case(p);
            const int formula = quad_char_of_2(p);
            if (formula != rec.quad2->plus2 || legendre(2, p) != formula ||
                legendre(-2, p) != rec.quad2->minus2) {
                rec.failures.push_back("quad2_formula");
            }
            if (p <= kBruteSquareLimit && !quad2_cross_check(p)) rec.failures.push_back("quad2_brute");
        }
    } catch (const std::exception& e) {
        rec.failures.push_back(std::string("exception: ") + e.what());
    }
    return rec;
}

}  // namespace

std::vector<PaperExampleRecord> paper_example_records() {
    std::vector<PaperExampleRecord> out;
    auto add = [&out](const std::string& name, bool passed, const std::string& detail) {
        out.push_back({name, false, passed, detail});
    };

    add("quad_char_of_2(11) = -1", quad_char_of_2(11) == -1, "x^2 ≡ 2 (mod 11) is unsolvable");

    {
        const std::vector<std::int64_t> expected = {0, 1, 8, 5, 9, 4, 7, 2, 6, 3, 10};
        add("cube table mod 11", cube_table(11) == expected, "all 11 rows, including 7^3 ≡ 2");
    }

    {
        const NormFormRep nf = solve_norm_form(61);
        const bool ok = form_equivalent(nf, NormFormRep{9, 5}) && solve_4p(61) == FourPRep{1, 3} &&
                        !solve_p_27(61).has_value();
        add("61: (a,b) ~ (9,5), (A,B) = (1,3), no (C,D)", ok,
            "norm form " + to_string(EisensteinInt(nf.a, nf.b)));
    }

    {
        // the representation side of the 29 example is true: neither
        // 4*29 = A^2 + 27 B^2 nor 29 = C^2 + 27 D^2 has a solution
        bool none = true;
        for (std::int64_t B = 0; 27 * B * B <= 4 * 29; ++B) {
            const auto [r4, e4] = isqrt(4 * 29 - 27 * B * B);
            if (e4) none = false;
            if (27 * B * B <= 29) {
                const auto [r1, e1] = isqrt(29 - 27 * B * B);
                if (e1) none = false;
            }
        }
        add("29 has no A^2+27B^2 or C^2+27D^2 representation", none, "");

        // ... but 29 ≡ 2 (mod 3) is inert, so the cube map is a bijection and
        // the conclusion drawn from the missing representation does not hold;
        // reported as a discrepancy, not asserted either way
        const std::optional<std::int64_t> root = cubic2_oracle(29);
        PaperExampleRecord rec;
        rec.name = "29 inert-modulus discrepancy";
        rec.informational = true;
        rec.passed = true;
        std::ostringstream os;
        os << "29 ≡ 2 (mod 3) is outside the p ≡ 1 (mod 3) hypothesis; source example "
              "claims solvable=false, oracle says solvable="
           << (root.has_value() ? "true" : "false");
        if (root) os << " (root " << *root << ")";
        rec.detail = os.str();
        out.push_back(rec);
    }

    add("(3-ω/5)_3 = ω^2",
        cubic_symbol(EisensteinInt(3, -1), EisensteinInt(5, 0)) == CubicValue::omega_power(2), "");

    {
        const auto [unit, primary] = primary_associate(EisensteinInt(3, -1));
        add("primary associate of 3-ω is -4-3ω",
            primary == EisensteinInt(-4, -3) && unit == EisensteinInt(-1, -1), "");
    }

    {
        // 259 = 7 * 37 is composite: the p = C^2 + 27 D^2 criterion requires a
        // prime modulus, so the claimed (2/259)_3 = 1 is checked against the
        // exhaustive oracle and reported as a discrepancy, not asserted.
        const bool claims_solvable = true;  // 259 = 4^2 + 27 * 3^2
        const std::optional<std::int64_t> root = cubic2_oracle(259);
        PaperExampleRecord rec;
        rec.name = "259 composite-modulus discrepancy";
        rec.informational = true;
        rec.passed = true;
        std::ostringstream os;
        os << "259 = 7*37 is composite; representation criterion claims solvable="
           << (claims_solvable ? "true" : "false") << ", oracle says solvable="
           << (root.has_value() ? "true" : "false");
        rec.detail = os.str();
        out.push_back(rec);
    }
    return out;
}

double VerifyReport::split_density() const {
    if (split_count == 0) return 0.0;
    return static_cast<double>(cubic_residue_split_count) / static_cast<double>(split_count);
}

VerifyReport run_verify(const VerifyOptions& options) {
    if (options.max < 2) throw std::domain_error("run_verify: max must be at least 2");
    VerifyReport report;
    report.options = options;

    const std::vector<std::int64_t> primes = primes_up_to(options.max);
    report.records.resize(primes.size());

    const int jobs = std::max(1, options.jobs);
    if (jobs == 1) {
        for (std::size_t i = 0; i < primes.size(); ++i) {
            report.records[i] = build_prime_record(primes[i], options);
        }
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&]() {
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= primes.size()) break;
                report.records[i] = build_prime_record(primes[i], options);
            }
        };
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(jobs));
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    for (const PrimeRecord& rec : report.records) {
        switch (rec.cls) {
            case PrimeClassification::split:
                ++report.split_count;
                if (rec.cubic2.by_oracle) ++report.cubic_residue_split_count;
                break;
            case PrimeClassification::inert: ++report.inert_count; break;
            case PrimeClassification::ramified: ++report.ramified_count; break;
        }
        report.failure_count += static_cast<std::int64_t>(rec.failures.size());
    }

    if (options.paper_examples) {
        report.paper_examples = paper_example_records();
        for (const PaperExampleRecord& rec : report.paper_examples) {
            if (!rec.informational && !rec.passed) ++report.failure_count;
        }
    }
    return report;
}

namespace {

std::string join(const std::vector<std::string>& parts, char sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) out.push_back(sep);
        out += parts[i];
    }
    return out;
}

}  // namespace

void write_csv(const VerifyReport& report, std::ostream& os) {
    os << kCsvHeader << "\n";
    for (const PrimeRecord& rec : report.records) {
        os << rec.p << ',' << to_string(rec.cls) << ',';
        if (rec.norm_form) os << rec.norm_form->a;
        os << ',';
        if (rec.norm_form) os << rec.norm_form->b;
        os << ',';
        if (rec.four_p) os << rec.four_p->A;
        os << ',';
        if (rec.four_p) os << rec.four_p->B;
        os << ',';
        if (rec.p27) os << rec.p27->C;
        os << ',';
        if (rec.p27) os << rec.p27->D;
        os << ',';
        os << (rec.cubic2.by_representation ? 1 : 0) << ',' << (rec.cubic2.by_symbol ? 1 : 0) << ','
           << (rec.cubic2.by_oracle ? 1 : 0) << ',';
        if (rec.cubic2.root) os << *rec.cubic2.root;
        os << ',';
        if (rec.quad2) {
            os << (rec.quad2->plus2 > 0 ? 'R' : 'N') << (rec.quad2->minus2 > 0 ? 'R' : 'N');
        }
        os << ',' << join(rec.failures, ';') << "\n";
    }
}

namespace {

nlohmann::json record_to_json(const PrimeRecord& rec) {
    nlohmann::json j;
    j["type"] = "prime";
    j["p"] = rec.p;
    j["class"] = to_string(rec.cls);
    j["norm_form"] = nullptr;
    if (rec.norm_form) j["norm_form"] = *rec.norm_form;
    j["four_p"] = nullptr;
    if (rec.four_p) j["four_p"] = *rec.four_p;
    j["p27"] = nullptr;
    if (rec.p27) j["p27"] = *rec.p27;
    j["cubic2"] = rec.cubic2;
    j["quad2"] = nullptr;
    if (rec.quad2) j["quad2"] = *rec.quad2;
    j["failures"] = rec.failures;
    return j;
}

}  // namespace

void write_json_lines(const VerifyReport& report, std::ostream& os) {
    for (const PrimeRecord& rec : report.records) {
        os << record_to_json(rec).dump() << "\n";
    }
    for (const PaperExampleRecord& rec : report.paper_examples) {
        nlohmann::json j;
        j["type"] = "paper_example";
        j["name"] = rec.name;
        j["informational"] = rec.informational;
        j["passed"] = rec.passed;
        j["detail"] = rec.detail;
        os << j.dump() << "\n";
    }
    nlohmann::json summary;
    summary["type"] = "summary";
    summary["max"] = report.options.max;
    summary["prime_count"] = report.prime_count();
    summary["split"] = report.split_count;
    summary["inert"] = report.inert_count;
    summary["ramified"] = report.ramified_count;
    summary["cubic_residue_split"] = report.cubic_residue_split_count;
    summary["density"] = report.split_density();
    summary["failures"] = report.failure_count;
    os << summary.dump() << "\n";
}

std::string render_summary(const VerifyReport& report) {
    std::ostringstream os;
    os << "verified " << report.prime_count() << " primes <= " << report.options.max << ": "
       << report.failure_count << " failure(s); split " << report.split_count << ", inert "
       << report.inert_count << ", ramified " << report.ramified_count
       << "; 2 is a cube at " << report.cubic_residue_split_count << "/" << report.split_count
       << " split primes (density " << report.split_density() << ")";
    for (const PaperExampleRecord& rec : report.paper_examples) {
        os << "\n" << (rec.informational ? "note" : (rec.passed ? "ok" : "FAIL")) << ": " << rec.name;
        if (!rec.detail.empty()) os << ": " << rec.detail;
    }
    return os.str();
}

}  // namespace cubres
