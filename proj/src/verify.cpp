#include "qres/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <condition_variable>
#include <iomanip>
#include <limits>
#include <mutex>
#include <optional>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "qres/class_number.hpp"
#include "qres/residue_statistics.hpp"
#include "qres/symbols.hpp"

namespace qres::cli {

using json = nlohmann::ordered_json;

namespace {

constexpr const char* kCardinality = "thm1.1-cardinality";
constexpr const char* kClosedForm = "thm1.1-S-closed-form";
constexpr const char* kBInvariance = "thm1.1-S-b-invariance";
constexpr const char* kLemma21 = "lemma2.1";
constexpr const char* kLemma22 = "lemma2.2-counts";
constexpr const char* kOracle = "oracle-N-equivalence";
constexpr const char* kSun2020 = "sun2020";
constexpr const char* kLinear = "sun2019-linear";
constexpr const char* kInversions = "sun2019-inversions";
constexpr const char* kThreeway = "symbols-threeway";

std::int64_t parse_int(const std::string& s)
{
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
        v = std::stoll(s, &used);
    } catch (const std::exception&) {
        throw ConfigError("not an integer: '" + s + "'");
    }
    if (used != s.size()) {
        throw ConfigError("not an integer: '" + s + "'");
    }
    return v;
}

std::vector<std::string> split(const std::string& s, char sep)
{
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream in(s);
    while (std::getline(in, cur, sep)) {
        parts.push_back(cur);
    }
    return parts;
}

std::string join(const std::vector<std::int64_t>& v, const char* sep)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i != 0) {
            s += sep;
        }
        s += std::to_string(v[i]);
    }
    return s;
}

std::string braces(const std::vector<std::int64_t>& v) { return "{" + join(v, ",") + "}"; }

// Draws distinct values of [0, p) not already in `taken` until `count` new
// ones are found or the range is exhausted.
void draw_distinct(std::mt19937_64& gen, std::int64_t p, int count, std::set<std::int64_t>& taken,
                   std::int64_t floor = 0)
{
    const std::int64_t span = p - floor;
    int added = 0;
    while (added < count && static_cast<std::int64_t>(taken.size()) < span) {
        const auto v = floor + static_cast<std::int64_t>(gen() % static_cast<std::uint64_t>(span));
        if (taken.insert(v).second) {
            ++added;
        }
    }
}

struct Failure {
    json detail;
};

// First counterexample wins; later ones are not recorded.
class ClaimTracker {
public:
    explicit ClaimTracker(std::string id) : id_(std::move(id)) {}

    bool ok() const { return !failure_; }

    void fail(json detail)
    {
        if (!failure_) {
            failure_ = Failure{std::move(detail)};
        }
    }

    ClaimResult result() const
    {
        ClaimResult r{id_, failure_ ? Status::fail : Status::pass, nullptr};
        if (failure_) {
            r.detail = failure_->detail;
        }
        return r;
    }

private:
    std::string id_;
    std::optional<Failure> failure_;
};

json detail_of(std::optional<std::int64_t> a, std::optional<std::int64_t> b, json expected,
               json actual)
{
    json d = json::object();
    if (a) {
        d["a"] = *a;
    }
    if (b) {
        d["b"] = *b;
    }
    d["expected"] = std::move(expected);
    d["actual"] = std::move(actual);
    return d;
}

template <typename Body>
ClaimResult evaluate_claim(const char* id, Body&& body)
{
    ClaimTracker tracker(id);
    try {
        body(tracker);
    } catch (const std::exception& e) {
        tracker.fail(json{{"error", e.what()}});
    }
    return tracker.result();
}

std::string flatten(const json& v)
{
    if (v.is_array()) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i != 0) {
                s += ';';
            }
            s += flatten(v[i]);
        }
        return s;
    }
    if (v.is_object()) {
        std::string s;
        for (auto it = v.begin(); it != v.end(); ++it) {
            if (!s.empty()) {
                s += ' ';
            }
            s += it.key() + "=" + flatten(it.value());
        }
        return s;
    }
    if (v.is_string()) {
        return v.get<std::string>();
    }
    return v.dump();
}

char separator(Format f) { return f == Format::tsv ? '\t' : ','; }

std::int64_t narrow(wide_int v)
{
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
        throw InvariantViolation("value exceeds 64 bits: " + qres::to_string(v));
    }
    return static_cast<std::int64_t>(v);
}

}  // namespace

Format parse_format(const std::string& name)
{
    if (name == "json") {
        return Format::json;
    }
    if (name == "csv") {
        return Format::csv;
    }
    if (name == "tsv") {
        return Format::tsv;
    }
    if (name == "text") {
        return Format::text;
    }
    throw ConfigError("unknown format '" + name + "'");
}

std::string to_string(Format f)
{
    switch (f) {
    case Format::json: return "json";
    case Format::csv: return "csv";
    case Format::tsv: return "tsv";
    case Format::text: return "text";
    }
    return "?";
}

BPolicy BPolicy::parse(const std::string& text)
{
    BPolicy policy;
    if (text == "auto") {
        return policy;
    }
    if (text == "all") {
        policy.kind = Kind::all;
        return policy;
    }
    if (text.rfind("sample:", 0) == 0) {
        policy.kind = Kind::sample;
        const std::int64_t k = parse_int(text.substr(7));
        if (k < 0 || k > 1'000'000) {
            throw ConfigError("sample size out of range: " + text);
        }
        policy.sample_size = static_cast<int>(k);
        return policy;
    }
    if (text.rfind("list:", 0) == 0) {
        policy.kind = Kind::list;
        for (const auto& part : split(text.substr(5), ',')) {
            policy.values.push_back(parse_int(part));
        }
        if (policy.values.empty()) {
            throw ConfigError("empty b list");
        }
        return policy;
    }
    throw ConfigError("bad --b value '" + text + "' (want all, sample:K or list:v1,v2,...)");
}

std::string BPolicy::describe() const
{
    switch (kind) {
    case Kind::automatic: return "auto";
    case Kind::all: return "all";
    case Kind::sample: return "sample:" + std::to_string(sample_size);
    case Kind::list: return "list:" + join(values, ",");
    }
    return "?";
}

const std::vector<std::string>& claim_registry()
{
    static const std::vector<std::string> ids = {
        kCardinality, kClosedForm, kBInvariance, kLemma21, kLemma22,
        kOracle,      kSun2020,    kLinear,      kInversions, kThreeway,
    };
    return ids;
}

void validate(const RunConfig& config)
{
    if (config.min_p < 5 || config.min_p > config.max_p) {
        throw ConfigError("need 5 <= min-p <= max-p, got " + std::to_string(config.min_p) + ".."
                          + std::to_string(config.max_p));
    }
    if (config.jobs < 1) {
        throw ConfigError("--jobs must be at least 1");
    }
    if (config.format == Format::text) {
        throw ConfigError("verify supports json, csv and tsv output");
    }
    const auto& known = claim_registry();
    for (const auto& id : config.claims) {
        if (std::find(known.begin(), known.end(), id) == known.end()) {
            throw ConfigError("unknown claim id '" + id + "'");
        }
    }
}

std::vector<std::int64_t> b_values_for(const BPolicy& policy, std::uint64_t seed, PrimeModulus p)
{
    const std::int64_t m = p.value();
    std::set<std::int64_t> values;
    auto everything = [&] {
        for (std::int64_t b = 0; b < m; ++b) {
            values.insert(b);
        }
    };
    switch (policy.kind) {
    case BPolicy::Kind::all:
        everything();
        break;
    case BPolicy::Kind::list:
        for (std::int64_t b : policy.values) {
            values.insert(least_nonneg_residue(b, p).value);
        }
        break;
    case BPolicy::Kind::automatic:
        if (m <= kExhaustiveLimit) {
            everything();
            break;
        }
        [[fallthrough]];
    case BPolicy::Kind::sample: {
        values = {0, 1, m - 1};
        std::mt19937_64 gen(seed + static_cast<std::uint64_t>(m));
        draw_distinct(gen, m, policy.sample_size, values);
        break;
    }
    }
    return {values.begin(), values.end()};
}

std::vector<std::int64_t> a_values_for(std::uint64_t seed, PrimeModulus p)
{
    const std::int64_t m = p.value();
    std::set<std::int64_t> values;
    if (m <= kExhaustiveLimit) {
        for (std::int64_t a = 2; a < m; ++a) {
            values.insert(a);
        }
    } else {
        values = {2, m - 1};
        // separate stream from the b draws
        std::mt19937_64 gen((seed + static_cast<std::uint64_t>(m)) ^ 0x9e3779b97f4a7c15ULL);
        draw_distinct(gen, m, kDefaultSampleSize, values, 2);
    }
    return {values.begin(), values.end()};
}

bool VerificationRecord::failed() const
{
    return std::any_of(claims.begin(), claims.end(),
                       [](const ClaimResult& c) { return c.status == Status::fail; });
}

VerificationRecord verify_prime(PrimeModulus p, const RunConfig& config)
{
    const auto start = std::chrono::steady_clock::now();
    auto wanted = [&](const char* id) {
        return config.claims.empty()
               || std::find(config.claims.begin(), config.claims.end(), id) != config.claims.end();
    };
    const std::int64_t m = p.value();
    const bool three_mod_four = p.mod4() == 3;

    VerificationRecord rec;
    rec.p = m;

    const bool need_reports =
        wanted(kCardinality) || wanted(kClosedForm) || wanted(kBInvariance) || wanted(kOracle);
    std::vector<ResidueCountReport> reports;
    std::optional<std::string> report_error;
    if (need_reports) {
        try {
            for (std::int64_t b : b_values_for(config.b, config.seed, p)) {
                reports.push_back(compute_S_T(p, b, wanted(kOracle)));
            }
        } catch (const std::exception& e) {
            report_error = e.what();
        }
    }
    auto with_reports = [&](ClaimTracker& t) {
        if (report_error) {
            t.fail(json{{"error", *report_error}});
            return false;
        }
        return true;
    };

    if (wanted(kCardinality)) {
        rec.claims.push_back(evaluate_claim(kCardinality, [&](ClaimTracker& t) {
            if (!with_reports(t)) {
                return;
            }
            const std::int64_t k = cardinality_prediction(p);
            for (const auto& r : reports) {
                const auto s = static_cast<std::int64_t>(r.S.size());
                const auto tt = static_cast<std::int64_t>(r.T.size());
                if (s != k || tt != k) {
                    t.fail(detail_of(std::nullopt, r.b, k, json{{"S", s}, {"T", tt}}));
                }
            }
        }));
    }
    if (wanted(kClosedForm)) {
        rec.claims.push_back(evaluate_claim(kClosedForm, [&](ClaimTracker& t) {
            if (!with_reports(t)) {
                return;
            }
            const auto closed = closed_form_S(p);
            for (const auto& r : reports) {
                if (r.S != closed) {
                    t.fail(detail_of(std::nullopt, r.b, closed, r.S));
                }
            }
        }));
    }
    if (wanted(kBInvariance)) {
        rec.claims.push_back(evaluate_claim(kBInvariance, [&](ClaimTracker& t) {
            if (!with_reports(t) || reports.empty()) {
                return;
            }
            for (const auto& r : reports) {
                if (r.S != reports.front().S) {
                    t.fail(detail_of(std::nullopt, r.b, reports.front().S, r.S));
                }
            }
        }));
    }
    if (wanted(kLemma21) && three_mod_four) {
        rec.claims.push_back(evaluate_claim(kLemma21, [&](ClaimTracker& t) {
            const auto dir = class_number_dirichlet(p);
            const std::int64_t forms = class_number_forms_oracle(p);
            if (dir.h != forms) {
                t.fail(detail_of(std::nullopt, std::nullopt, forms, dir.h));
            }
            if (dir.h % 2 == 0) {
                t.fail(json{{"expected", "odd h"}, {"actual", dir.h}});
            }
            const wide_int plus = qr_sum(p, SymbolValue::plus());
            const wide_int minus = qr_sum(p, SymbolValue::minus());
            const wide_int pp = m;
            if (plus + minus != pp * (m - 1) / 2 || minus - plus != pp * dir.h) {
                t.fail(json{{"expected", narrow(pp * dir.h)}, {"actual", narrow(minus - plus)}});
            }
        }));
    }
    if (wanted(kLemma22) && three_mod_four) {
        rec.claims.push_back(evaluate_claim(kLemma22, [&](ClaimTracker& t) {
            const PatternCounts got = consecutive_pattern_counts(p);
            const PatternCounts want{(m - 3) / 4, (m - 3) / 4, (m + 1) / 4};
            if (got != want || got.rr <= 0 || got.nr <= 0 || got.rn <= 0) {
                t.fail(detail_of(std::nullopt, std::nullopt, json::array({want.rr, want.nr, want.rn}),
                                 json::array({got.rr, got.nr, got.rn})));
            }
        }));
    }
    if (wanted(kOracle)) {
        rec.claims.push_back(evaluate_claim(kOracle, [&](ClaimTracker& t) {
            if (!with_reports(t)) {
                return;
            }
            for (const auto& r : reports) {
                const CountFormula formula(p, r.b);
                for (const auto& e : r.per_a) {
                    const std::int64_t f = formula.evaluate(e.a);
                    if (f != e.n || e.n < 0 || e.n > p.half()) {
                        t.fail(detail_of(e.a, r.b, e.n, f));
                    }
                }
            }
        }));
    }
    if (wanted(kSun2020)) {
        rec.claims.push_back(evaluate_claim(kSun2020, [&](ClaimTracker& t) {
            for (std::int64_t a = 2; a < m; ++a) {
                const auto [lhs, rhs] = sun2020_check(m, a);
                if (lhs != rhs) {
                    t.fail(detail_of(a, std::nullopt, rhs.sign(), lhs.sign()));
                }
            }
        }));
    }
    if (wanted(kLinear)) {
        rec.claims.push_back(evaluate_claim(kLinear, [&](ClaimTracker& t) {
            const auto bs = b_values_for(config.b, config.seed, p);
            for (std::int64_t a : a_values_for(config.seed, p)) {
                for (std::int64_t b : bs) {
                    const std::int64_t got = linear_shift_count(p, a, b);
                    if (got != p.half()) {
                        t.fail(detail_of(a, b, p.half(), got));
                    }
                }
            }
        }));
    }
    if (wanted(kInversions) && three_mod_four) {
        rec.claims.push_back(evaluate_claim(kInversions, [&](ClaimTracker& t) {
            const auto r = half_range_inversion_check(p);
            if (r.parity != r.predicted) {
                t.fail(detail_of(std::nullopt, std::nullopt, r.predicted.sign(), r.parity.sign()));
            }
        }));
    }
    if (wanted(kThreeway)) {
        rec.claims.push_back(evaluate_claim(kThreeway, [&](ClaimTracker& t) {
            for (std::int64_t a = 1; a < m; ++a) {
                const SymbolValue e = legendre_euler(a, p);
                const SymbolValue j = jacobi(a, m);
                const SymbolValue g = legendre_gauss_lemma(a, p);
                if (e != j || e != g) {
                    t.fail(detail_of(a, std::nullopt, e.sign(), json::array({j.sign(), g.sign()})));
                }
            }
        }));
    }

    rec.elapsed_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return rec;
}

RecordWriter::RecordWriter(std::ostream& out, const RunConfig& config) : out_(out), config_(config) {}

void RecordWriter::header()
{
    std::vector<std::string> ids = config_.claims.empty() ? claim_registry() : config_.claims;
    if (config_.format == Format::json) {
        json h;
        h["schema"] = kSchema;
        h["header"] = {{"min_p", config_.min_p},
                       {"max_p", config_.max_p},
                       {"b_policy", config_.b.describe()},
                       {"seed", config_.seed},
                       {"claims", ids}};
        out_ << h.dump() << '\n';
        return;
    }
    const char sep = separator(config_.format);
    std::string claims;
    for (const auto& id : ids) {
        claims += (claims.empty() ? "" : ";") + id;
    }
    out_ << "# schema=" << kSchema << " min_p=" << config_.min_p << " max_p=" << config_.max_p
         << " b_policy=" << config_.b.describe() << " seed=" << config_.seed << " claims=" << claims
         << '\n';
    out_ << "p" << sep << "claim" << sep << "status" << sep << "detail";
    if (config_.timing) {
        out_ << sep << "elapsed_ms";
    }
    out_ << '\n';
}

void RecordWriter::record(const VerificationRecord& rec)
{
    if (config_.format == Format::json) {
        json r;
        r["schema"] = kSchema;
        r["p"] = rec.p;
        json claims = json::array();
        for (const auto& c : rec.claims) {
            json entry;
            entry["id"] = c.id;
            entry["status"] = c.status == Status::pass ? "pass" : "fail";
            if (!c.detail.is_null()) {
                entry["detail"] = c.detail;
            }
            claims.push_back(std::move(entry));
        }
        r["claims"] = std::move(claims);
        if (config_.timing) {
            r["elapsed_ms"] = rec.elapsed_ms;
        }
        out_ << r.dump() << '\n';
        return;
    }
    const char sep = separator(config_.format);
    for (const auto& c : rec.claims) {
        out_ << rec.p << sep << c.id << sep << (c.status == Status::pass ? "pass" : "fail") << sep
             << (c.detail.is_null() ? "" : flatten(c.detail));
        if (config_.timing) {
            out_ << sep << rec.elapsed_ms;
        }
        out_ << '\n';
    }
}

void RecordWriter::summary(std::int64_t primes, std::int64_t checked, std::int64_t failures)
{
    if (config_.format == Format::json) {
        json s;
        s["schema"] = kSchema;
        s["summary"] = {{"primes", primes}, {"claims_checked", checked}, {"failures", failures}};
        out_ << s.dump() << '\n';
        return;
    }
    out_ << "# summary primes=" << primes << " claims_checked=" << checked
         << " failures=" << failures << '\n';
}

int run_verify(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    try {
        validate(config);
    } catch (const ConfigError& e) {
        err << "qrverify: " << e.what() << '\n';
        return 2;
    }

    const std::vector<PrimeModulus> primes = odd_prime_moduli(config.min_p, config.max_p);
    const std::size_t n = primes.size();
    RecordWriter writer(out, config);
    writer.header();

    std::vector<std::optional<VerificationRecord>> slots(n);
    std::mutex mu;
    std::condition_variable ready;
    std::atomic<std::size_t> next{0};

    auto work = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= n) {
                return;
            }
            VerificationRecord rec = verify_prime(primes[i], config);
            {
                std::lock_guard lock(mu);
                slots[i] = std::move(rec);
            }
            ready.notify_all();
        }
    };

    std::vector<std::jthread> pool;
    const auto workers = std::min<std::size_t>(static_cast<std::size_t>(config.jobs), n);
    if (workers > 1) {
        for (std::size_t w = 0; w < workers; ++w) {
            pool.emplace_back(work);
        }
    }

    std::int64_t checked = 0;
    std::int64_t failures = 0;
    const std::size_t progress_step = std::max<std::size_t>(1, n / 20);
    for (std::size_t i = 0; i < n; ++i) {
        VerificationRecord rec;
        if (workers > 1) {
            std::unique_lock lock(mu);
            ready.wait(lock, [&] { return slots[i].has_value(); });
            rec = std::move(*slots[i]);
            slots[i].reset();
        } else {
            rec = verify_prime(primes[i], config);
        }
        writer.record(rec);
        checked += static_cast<std::int64_t>(rec.claims.size());
        for (const auto& c : rec.claims) {
            if (c.status == Status::fail) {
                ++failures;
                err << "qrverify: FAIL p=" << rec.p << " claim=" << c.id << " " << c.detail.dump()
                    << '\n';
            }
        }
        if (!config.quiet && ((i + 1) % progress_step == 0 || i + 1 == n)) {
            err << "qrverify: " << (i + 1) << "/" << n << " primes (p=" << rec.p << ")\n";
        }
    }
    writer.summary(static_cast<std::int64_t>(n), checked, failures);
    if (!config.quiet) {
        err << "qrverify: " << n << " primes, " << checked << " claims, " << failures
            << " failures\n";
    }
    return failures == 0 ? 0 : 1;
}

int run_table(std::int64_t p_raw, const BPolicy& b, Format format, std::ostream& out,
              std::ostream& err)
{
    std::optional<PrimeModulus> p;
    try {
        if (p_raw <= 3 || !is_prime(static_cast<std::uint64_t>(p_raw))) {
            throw ConfigError("table needs a prime p > 3, got " + std::to_string(p_raw));
        }
        p.emplace(p_raw);
    } catch (const std::exception& e) {
        err << "qrverify: " << e.what() << '\n';
        return 2;
    }

    // Tables list every shift unless asked otherwise.
    BPolicy policy = b;
    if (policy.kind == BPolicy::Kind::automatic) {
        policy.kind = BPolicy::Kind::all;
    }
    std::vector<ResidueCountReport> rows;
    for (std::int64_t v : b_values_for(policy, kDefaultSeed, *p)) {
        rows.push_back(compute_S_T(*p, v));
    }

    switch (format) {
    case Format::json: {
        json doc;
        doc["p"] = p_raw;
        doc["rows"] = json::array();
        for (const auto& r : rows) {
            doc["rows"].push_back({{"b", r.b}, {"S", r.S}, {"T", r.T}});
        }
        out << doc.dump() << '\n';
        break;
    }
    case Format::csv:
    case Format::tsv: {
        const char sep = separator(format);
        out << "p" << sep << "b" << sep << "S" << sep << "T" << '\n';
        for (const auto& r : rows) {
            out << p_raw << sep << r.b << sep << join(r.S, ";") << sep << join(r.T, ";") << '\n';
        }
        break;
    }
    case Format::text: {
        std::vector<std::vector<std::string>> grid = {{"b"}, {"S"}, {"T"}};
        for (const auto& r : rows) {
            grid[0].push_back(std::to_string(r.b));
            grid[1].push_back(braces(r.S));
            grid[2].push_back(braces(r.T));
        }
        std::vector<std::size_t> width(grid[0].size(), 0);
        for (const auto& line : grid) {
            for (std::size_t c = 0; c < line.size(); ++c) {
                width[c] = std::max(width[c], line[c].size());
            }
        }
        out << "p = " << p_raw << '\n';
        for (const auto& line : grid) {
            std::string text;
            for (std::size_t c = 0; c < line.size(); ++c) {
                if (c != 0) {
                    text += " | ";
                }
                text += line[c] + std::string(width[c] - line[c].size(), ' ');
            }
            while (!text.empty() && text.back() == ' ') {
                text.pop_back();
            }
            out << text << '\n';
        }
        break;
    }
    }
    return 0;
}

int run_classnum(std::int64_t min_p, std::int64_t max_p, Format format, std::ostream& out,
                 std::ostream& err)
{
    if (min_p < 2 || min_p > max_p) {
        err << "qrverify: need 2 <= min-p <= max-p, got " << min_p << ".." << max_p << '\n';
        return 2;
    }
    struct Row {
        std::int64_t p;
        std::int64_t h;
        std::int64_t weighted_sum;
        std::int64_t forms;
    };
    std::vector<Row> rows;
    for (PrimeModulus p : odd_prime_moduli(min_p, max_p)) {
        if (p.mod4() != 3 || p.value() == 3) {
            continue;
        }
        const auto dir = class_number_dirichlet(p);
        rows.push_back({p.value(), dir.h, narrow(dir.weighted_sum), class_number_forms_oracle(p)});
    }

    int code = 0;
    for (const auto& r : rows) {
        if (r.h != r.forms) {
            err << "qrverify: FAIL p=" << r.p << " dirichlet h=" << r.h << " forms=" << r.forms << '\n';
            code = 1;
        }
    }

    switch (format) {
    case Format::json: {
        json doc;
        doc["min_p"] = min_p;
        doc["max_p"] = max_p;
        doc["rows"] = json::array();
        for (const auto& r : rows) {
            doc["rows"].push_back({{"p", r.p},
                                   {"h", r.h},
                                   {"weighted_sum", r.weighted_sum},
                                   {"forms_count", r.forms},
                                   {"agree", r.h == r.forms}});
        }
        out << doc.dump() << '\n';
        break;
    }
    case Format::csv:
    case Format::tsv: {
        const char sep = separator(format);
        out << "p" << sep << "h" << sep << "weighted_sum" << sep << "forms_count" << '\n';
        for (const auto& r : rows) {
            out << r.p << sep << r.h << sep << r.weighted_sum << sep << r.forms << '\n';
        }
        break;
    }
    case Format::text:
        out << std::setw(10) << "p" << std::setw(8) << "h" << std::setw(16) << "weighted_sum"
            << std::setw(8) << "forms" << '\n';
        for (const auto& r : rows) {
            out << std::setw(10) << r.p << std::setw(8) << r.h << std::setw(16) << r.weighted_sum
                << std::setw(8) << r.forms << '\n';
        }
        break;
    }
    return code;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Verify quadratic-residue counting identities over ranges of primes", "qrverify"};
    app.require_subcommand(1);

    RunConfig config;
    std::string b_text = "auto";
    std::string format_text = "json";
    std::string claims_text;
    auto* verify = app.add_subcommand("verify", "check every claim for each prime in a range");
    verify->add_option("--min-p", config.min_p, "smallest prime to check (>= 5)")->required();
    verify->add_option("--max-p", config.max_p, "largest prime to check")->required();
    verify->add_option("--b", b_text, "shifts: all | sample:K | list:v1,v2,... (default auto)");
    verify->add_option("--seed", config.seed, "base seed for sampled shifts");
    verify->add_option("--jobs", config.jobs, "worker threads");
    verify->add_option("--format", format_text, "json | csv | tsv");
    verify->add_option("--claims", claims_text, "comma-separated claim ids");
    verify->add_flag("--quiet", config.quiet, "no progress on stderr");
    verify->add_flag("--timing", config.timing, "include per-prime elapsed_ms in records");

    std::int64_t table_p = 0;
    std::string table_b = "all";
    std::string table_format = "text";
    bool table_quiet = false;
    auto* table = app.add_subcommand("table", "S and T for each shift b at one prime");
    table->add_option("p", table_p, "prime modulus > 3")->required();
    table->add_option("--b", table_b, "shifts: all | sample:K | list:v1,v2,...");
    table->add_option("--format", table_format, "text | json | csv | tsv");
    table->add_flag("--quiet", table_quiet, "accepted for symmetry; tables print no progress");

    std::int64_t cn_min = 0;
    std::int64_t cn_max = 0;
    std::string cn_format = "text";
    bool cn_quiet = false;
    auto* classnum = app.add_subcommand("classnum", "h(-p) by the Dirichlet sum and by reduced forms");
    classnum->add_option("--min-p", cn_min, "smallest prime")->required();
    classnum->add_option("--max-p", cn_max, "largest prime")->required();
    classnum->add_option("--format", cn_format, "text | json | csv | tsv");
    classnum->add_flag("--quiet", cn_quiet, "accepted for symmetry");

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (*verify) {
            config.b = BPolicy::parse(b_text);
            config.format = parse_format(format_text);
            if (!claims_text.empty()) {
                config.claims = split(claims_text, ',');
            }
            return run_verify(config, out, err);
        }
        if (*table) {
            return run_table(table_p, BPolicy::parse(table_b), parse_format(table_format), out, err);
        }
        return run_classnum(cn_min, cn_max, parse_format(cn_format), out, err);
    } catch (const ConfigError& e) {
        err << "qrverify: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace qres::cli
