#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cubres/eisenstein.hpp"
#include "cubres/representations.hpp"
#include "cubres/solvability.hpp"
#include "cubres/symbols.hpp"

namespace cubres {

struct VerifyOptions {
    std::int64_t max = 1000;        ///< verify all primes <= max (max >= 2)
    int jobs = 1;                   ///< worker threads; records stay in prime order
    std::uint64_t seed = 0x5EED5EEDu;  ///< seed for the randomized spot checks
    bool paper_examples = false;    ///< include the worked-example records
};

struct PrimeRecord {
    std::int64_t p = 0;
    PrimeClassification cls = PrimeClassification::inert;
    std::optional<NormFormRep> norm_form;  // split primes
    std::optional<FourPRep> four_p;        // split primes
    std::optional<P27Rep> p27;             // split primes with a representation
    Cubic2Verdict cubic2;
    std::optional<QuadCase> quad2;  // odd primes
    std::vector<std::string> failures;
};

/// Deterministic checks of the bundled worked examples. `informational`
/// entries record the two known-wrong examples (29 and 259) and never count
/// as failures.
struct PaperExampleRecord {
    std::string name;
    bool informational = false;
    bool passed = true;
    std::string detail;
};

struct VerifyReport {
    VerifyOptions options;
    std::vector<PrimeRecord> records;
    std::vector<PaperExampleRecord> paper_examples;

    std::int64_t prime_count() const { return static_cast<std::int64_t>(records.size()); }
    std::int64_t split_count = 0;
    std::int64_t inert_count = 0;
    std::int64_t ramified_count = 0;
    std::int64_t cubic_residue_split_count = 0;  ///< split primes where 2 is a cube
    double split_density() const;
    std::int64_t failure_count = 0;
    bool has_failures() const { return failure_count > 0; }
};

VerifyReport run_verify(const VerifyOptions& options);

/// Builds the worked-example records (including the informational composite
/// 259 note) without running the per-prime sweep.
std::vector<PaperExampleRecord> paper_example_records();

inline constexpr const char* kCsvHeader =
    "p,class,a,b,A,B,C,D,cubic2_rep,cubic2_sym,cubic2_oracle,root,quad2,failures";

/// Header plus one row per prime. quad2 is two letters (status of +2 then
/// -2, R residue / N nonresidue), empty for p = 2; failures are
/// semicolon-joined.
void write_csv(const VerifyReport& report, std::ostream& os);

/// One JSON object per line: prime records, then any paper-example records,
/// then a summary object.
void write_json_lines(const VerifyReport& report, std::ostream& os);

std::string render_summary(const VerifyReport& report);

}  // namespace cubres
