#include <doctest.h>

#include <json.hpp>

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "cubres/json_io.hpp"
#include "cubres/verify.hpp"

using namespace cubres;
using nlohmann::json;

namespace {

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) out.push_back(line);
    return out;
}

}  // namespace

TEST_CASE("verify sweeps every prime in range") {
    VerifyOptions opts;
    opts.max = 1000;
    const VerifyReport report = run_verify(opts);
    CHECK(report.prime_count() == 168);  // pi(1000)
    CHECK(report.failure_count == 0);
    CHECK(report.split_count + report.inert_count + report.ramified_count == 168);
    CHECK(report.ramified_count == 1);
    CHECK(!report.has_failures());
    CHECK_THROWS_AS(run_verify(VerifyOptions{.max = 1}), std::domain_error);
}

TEST_CASE("no split prime <= 28 carries a (C,D) representation") {
    VerifyOptions opts;
    opts.max = 28;
    const VerifyReport report = run_verify(opts);
    CHECK(report.failure_count == 0);
    for (const PrimeRecord& rec : report.records) {
        if (rec.cls == PrimeClassification::split) {
            CHECK(!rec.p27.has_value());
            CHECK(!rec.cubic2.by_oracle);
        }
    }
}

TEST_CASE("CSV rendering") {
    VerifyOptions opts;
    opts.max = 100;
    const VerifyReport report = run_verify(opts);
    std::ostringstream os;
    write_csv(report, os);
    const auto lines = lines_of(os.str());
    REQUIRE(lines.size() == 26);  // header + pi(100) = 25 rows
    CHECK(lines[0] == std::string(kCsvHeader));
    CHECK(lines[1].substr(0, 8) == "2,inert,");
    // every row has the full column count
    for (std::size_t i = 1; i < lines.size(); ++i) {
        CHECK(std::count(lines[i].begin(), lines[i].end(), ',') == 13);
    }
}

TEST_CASE("JSON lines round-trip") {
    VerifyOptions opts;
    opts.max = 100;
    opts.paper_examples = true;
    const VerifyReport report = run_verify(opts);
    std::ostringstream os;
    write_json_lines(report, os);
    const auto lines = lines_of(os.str());
    REQUIRE(!lines.empty());

    std::size_t primes = 0, examples = 0, summaries = 0;
    for (const auto& line : lines) {
        const json j = json::parse(line);  // must re-parse
        const std::string type = j.at("type").get<std::string>();
        if (type == "prime") {
            ++primes;
            Cubic2Verdict verdict = j.at("cubic2").get<Cubic2Verdict>();
            json again = verdict;
            CHECK(again == j.at("cubic2"));
            if (!j.at("norm_form").is_null()) {
                NormFormRep nf = j.at("norm_form").get<NormFormRep>();
                CHECK(json(nf) == j.at("norm_form"));
            }
        } else if (type == "paper_example") {
            ++examples;
        } else {
            ++summaries;
            CHECK(j.at("prime_count").get<std::int64_t>() == 25);
        }
    }
    CHECK(primes == 25);
    CHECK(examples == 8);
    CHECK(summaries == 1);
}

TEST_CASE("core values round-trip through JSON") {
    const EisensteinInt x(-4, -3);
    CHECK(json(x).get<EisensteinInt>() == x);
    const CubicValue v = CubicValue::omega_power(2);
    CHECK(json(v).get<CubicValue>() == v);
    CHECK(json(CubicValue::zero()).get<CubicValue>() == CubicValue::zero());
    const QuadCase qc{3, -1, +1};
    CHECK(json(qc).get<QuadCase>() == qc);
    const FourPRep fp{1, 3};
    CHECK(json(fp).get<FourPRep>() == fp);
    const P27Rep p27{2, 1};
    CHECK(json(p27).get<P27Rep>() == p27);
    Cubic2Verdict verdict;
    verdict.p = 31;
    verdict.by_representation = verdict.by_symbol = verdict.by_oracle = true;
    verdict.root = 4;
    CHECK(json(verdict).get<Cubic2Verdict>() == verdict);
}

TEST_CASE("parallel verification is deterministic") {
    VerifyOptions one;
    one.max = 500;
    one.jobs = 1;
    VerifyOptions four = one;
    four.jobs = 4;
    std::ostringstream a, b;
    write_csv(run_verify(one), a);
    write_csv(run_verify(four), b);
    CHECK(a.str() == b.str());
}

TEST_CASE("paper-example records") {
    const auto records = paper_example_records();
    REQUIRE(records.size() == 8);
    int informational = 0;
    for (const auto& rec : records) {
        if (rec.informational) {
            ++informational;
            const bool is259 = rec.name.find("259") != std::string::npos;
            const bool is29 = rec.name.find("29") != std::string::npos;
            CHECK((is259 || is29));
            if (is259) {
                CHECK(rec.detail.find("oracle says solvable=false") != std::string::npos);
                CHECK(rec.detail.find("claims solvable=true") != std::string::npos);
            }
            if (is29) {
                CHECK(rec.detail.find("oracle says solvable=true") != std::string::npos);
                CHECK(rec.detail.find("root 26") != std::string::npos);
            }
        } else {
            CHECK(rec.passed);
        }
    }
    CHECK(informational == 2);

    // the informational 259 note does not flip the exit status
    VerifyOptions opts;
    opts.max = 30;
    opts.paper_examples = true;
    CHECK(!run_verify(opts).has_failures());
}

TEST_CASE("failures flip the exit contract") {
    VerifyReport report;
    CHECK(!report.has_failures());
    report.failure_count = 1;
    CHECK(report.has_failures());
}
