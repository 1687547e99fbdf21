#pragma once

// Verification sweeps, table reproduction and class-number tabulation behind
// the qrverify command line. Everything writes to caller-supplied streams and
// returns a process exit code: 0 all pass, 1 a claim failed, 2 bad usage.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "qres/core_arith.hpp"

namespace qres::cli {

inline constexpr const char* kSchema = "qr-verify/1";
inline constexpr std::uint64_t kDefaultSeed = 20180000;
inline constexpr std::int64_t kExhaustiveLimit = 300;
inline constexpr int kDefaultSampleSize = 8;

enum class Format { json, csv, tsv, text };

Format parse_format(const std::string& name);
std::string to_string(Format f);

/// Which shifts b (and, for the linear-shift claim, multipliers a) a sweep visits.
struct BPolicy {
    enum class Kind { automatic, all, sample, list };

    Kind kind = Kind::automatic;
    int sample_size = kDefaultSampleSize;
    std::vector<std::int64_t> values;

    /// "all", "sample:K", "list:v1,v2,..." or "auto".
    static BPolicy parse(const std::string& text);
    std::string describe() const;
};

struct RunConfig {
    std::int64_t min_p = 5;
    std::int64_t max_p = 5;
    BPolicy b;
    std::uint64_t seed = kDefaultSeed;
    int jobs = 1;
    Format format = Format::json;
    std::vector<std::string> claims;  // empty selects the whole registry
    bool quiet = false;
    bool timing = false;
};

/// Fixed claim identifiers, in evaluation order.
const std::vector<std::string>& claim_registry();

/// Throws ConfigError if the configuration is unusable.
void validate(const RunConfig& config);

class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// b values visited for prime p: "auto" means every b for p <= 300 and
/// otherwise 8 seeded draws together with {0, 1, p-1}; sorted, distinct.
std::vector<std::int64_t> b_values_for(const BPolicy& policy, std::uint64_t seed, PrimeModulus p);

/// Multipliers a for the linear-shift claim: all of [2, p-1] for p <= 300,
/// otherwise {2, p-1} plus seeded draws.
std::vector<std::int64_t> a_values_for(std::uint64_t seed, PrimeModulus p);

enum class Status { pass, fail };

struct ClaimResult {
    std::string id;
    Status status = Status::pass;
    nlohmann::ordered_json detail;  // null unless failed: {a?, b?, expected, actual}
};

struct VerificationRecord {
    std::int64_t p = 0;
    std::vector<ClaimResult> claims;
    double elapsed_ms = 0.0;

    bool failed() const;
};

VerificationRecord verify_prime(PrimeModulus p, const RunConfig& config);

/// Emission of records in the configured format.
class RecordWriter {
public:
    RecordWriter(std::ostream& out, const RunConfig& config);

    void header();
    void record(const VerificationRecord& rec);
    void summary(std::int64_t primes, std::int64_t checked, std::int64_t failures);

private:
    std::ostream& out_;
    const RunConfig& config_;
};

int run_verify(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_table(std::int64_t p, const BPolicy& b, Format format, std::ostream& out, std::ostream& err);
int run_classnum(std::int64_t min_p, std::int64_t max_p, Format format, std::ostream& out,
                 std::ostream& err);

/// Parses argv and dispatches to a subcommand.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qres::cli
