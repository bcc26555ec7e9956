#include "svf/game.hpp"

#include "svf/errors.hpp"
#include "svf/kernels.hpp"

#include <bit>

namespace svf {

namespace {

const Rational kZero{};

std::string dims(int expected, int actual) {
    return "expected " + std::to_string(expected) + " coordinates, got " + std::to_string(actual);
}

} // namespace

ProbabilityVector ProbabilityVector::make(std::vector<Rational> entries) {
    if (entries.empty()) throw Error(ErrorKind::EmptyInput, "probability vector needs at least one entry");
    const long n = static_cast<long>(entries.size());
    Rational total;
    for (long t = 0; t < n; ++t) {
        if (entries[t].sign() < 0) {
            throw Error(ErrorKind::NegativeEntry, "p_" + std::to_string(t) + " = " + entries[t].str() + " < 0");
        }
        total += Rational(binomial(n - 1, t)) * entries[t];
    }
    if (total != Rational(1)) {
        throw Error(ErrorKind::NormalizationViolated,
                    "sum_t C(n-1,t) p_t = " + total.str() + ", expected 1");
    }
    return ProbabilityVector(std::move(entries));
}

const Rational& ProbabilityVector::at(int t) const noexcept {
    if (t < 0 || t >= size()) return kZero;
    return entries_[static_cast<std::size_t>(t)];
}

ProbabilityVector make_probability_vector(std::vector<Rational> entries) {
    return ProbabilityVector::make(std::move(entries));
}

ProbabilityVector preset_probability_vector(std::string_view name, int n) {
    if (n < 1) throw Error(ErrorKind::PreconditionViolated, "preset needs n >= 1");
    std::vector<Rational> entries;
    entries.reserve(static_cast<std::size_t>(n));
    if (name == "banzhaf") {
        const mpz_class denom = mpz_class(1) << (n - 1);
        for (int t = 0; t < n; ++t) entries.emplace_back(mpz_class(1), denom);
    } else if (name == "shapley") {
        // (n-t-1)! t! / n!
        mpz_class n_fact;
        mpz_fac_ui(n_fact.get_mpz_t(), static_cast<unsigned long>(n));
        for (int t = 0; t < n; ++t) {
            mpz_class a, b;
            mpz_fac_ui(a.get_mpz_t(), static_cast<unsigned long>(n - t - 1));
            mpz_fac_ui(b.get_mpz_t(), static_cast<unsigned long>(t));
            entries.emplace_back(a * b, n_fact);
        }
    } else {
        throw Error(ErrorKind::UnknownPreset, "unknown preset '" + std::string(name) + "'");
    }
    return ProbabilityVector::make(std::move(entries));
}

bool is_reasonable(const ProbabilityVector& p, const Rational& alpha, const Rational& beta) {
    if (alpha.sign() <= 0 || beta.sign() <= 0 || alpha + beta >= Rational(1)) {
        throw Error(ErrorKind::PreconditionViolated, "need 0 < alpha, beta and alpha + beta < 1");
    }
    const Rational n(p.size());
    const Rational lo = alpha * n;
    const Rational hi = (Rational(1) - beta) * n;
    for (int t = 0; t < p.size(); ++t) {
        const Rational rt(t);
        if (lo <= rt && rt <= hi && p.at(t).sign() > 0) return true;
    }
    return false;
}

Assignment::Assignment(int n, std::uint64_t mask) : n_(n), mask_(mask) {
    if (n < 0 || n > 63) throw Error(ErrorKind::InstanceTooLarge, "assignments support up to 63 coordinates");
    if (n < 64 && (mask >> n) != 0) throw Error(ErrorKind::DimensionMismatch, "mask has bits beyond n");
}

Assignment Assignment::from_signs(std::span<const int> signs) {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < signs.size(); ++i) {
        if (signs[i] == 1) {
            mask |= std::uint64_t{1} << i;
        } else if (signs[i] != -1) {
            throw Error(ErrorKind::ParseError, "assignment coordinates must be -1 or +1");
        }
    }
    return Assignment(static_cast<int>(signs.size()), mask);
}

int Assignment::weight() const noexcept {
    return std::popcount(mask_);
}

std::vector<int> Assignment::signs() const {
    std::vector<int> out(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) out[static_cast<std::size_t>(i)] = (*this)[i];
    return out;
}

Rational dot(std::span<const Rational> w, const Assignment& x) {
    if (static_cast<int>(w.size()) != x.size()) {
        throw Error(ErrorKind::DimensionMismatch, dims(static_cast<int>(w.size()), x.size()));
    }
    Rational s;
    for (int i = 0; i < x.size(); ++i) {
        if (x[i] > 0) s += w[static_cast<std::size_t>(i)];
        else s -= w[static_cast<std::size_t>(i)];
    }
    return s;
}

int eval_game(const WeightedGame& g, const Assignment& x) {
    return sign_of(dot(g.weights, x), g.threshold);
}

Rational mu_prime(const ProbabilityVector& p, int weight_class) {
    return p.at(weight_class) + p.at(weight_class - 1);
}

Rational mu_prime(const ProbabilityVector& p, const Assignment& x) {
    if (x.size() != p.size()) throw Error(ErrorKind::DimensionMismatch, dims(p.size(), x.size()));
    return mu_prime(p, x.weight());
}

Rational lambda_norm(const ProbabilityVector& p) {
    const int n = p.size();
    Rational total;
    for (int t = 0; t <= n; ++t) total += Rational(binomial(n, t)) * mu_prime(p, t);
    return total;
}

InducedDistribution::InducedDistribution(ProbabilityVector base)
    : base_(std::move(base)), lambda_(lambda_norm(base_)) {}

Rational InducedDistribution::probability(const Assignment& x) const {
    return mu_prime(base_, x) / lambda_;
}

std::optional<IntegerGame> scale_to_integers(const WeightedGame& g) {
    std::vector<Rational> all = g.weights;
    all.push_back(g.threshold);
    const mpz_class scale = common_denominator(all);
    const mpz_class limit = mpz_class(1) << 62;
    mpz_class magnitude = 0;
    IntegerGame out;
    out.weights.reserve(g.weights.size());
    for (const auto& v : all) {
        const mpq_class scaled = v.value() * scale;
        const mpz_class z = scaled.get_num();
        magnitude += ::abs(z);
        if (magnitude >= limit) return std::nullopt;
        out.weights.push_back(z.get_si());
    }
    out.threshold = out.weights.back();
    out.weights.pop_back();
    return out;
}

TruthTable::TruthTable(int n) : n_(n) {
    if (n < 0 || n > 40) throw Error(ErrorKind::InstanceTooLarge, "truth tables support up to 40 coordinates");
    const std::uint64_t words = n <= 6 ? 1 : (std::uint64_t{1} << (n - 6));
    words_.assign(words, 0);
}

void TruthTable::set(std::uint64_t mask, int value) noexcept {
    const std::uint64_t bit = std::uint64_t{1} << (mask & 63);
    if (value > 0) words_[mask >> 6] |= bit;
    else words_[mask >> 6] &= ~bit;
}

std::size_t TruthTable::hash() const noexcept {
    std::uint64_t h = 1469598103934665603ULL ^ static_cast<std::uint64_t>(n_);
    for (std::uint64_t w : words_) {
        h ^= w;
        h *= 1099511628211ULL;
        h ^= h >> 29;
    }
    return static_cast<std::size_t>(h);
}

void require_enumerable(int n, int cap) {
    if (n > cap || n > 40) {
        throw Error(ErrorKind::InstanceTooLarge,
                    std::to_string(n) + " players exceeds the enumeration cap of " + std::to_string(cap));
    }
}

TruthTable truth_table_exact(const WeightedGame& g, int cap) {
    const int n = g.size();
    require_enumerable(n, cap);
    TruthTable table(n);
    Rational sum;
    for (const auto& w : g.weights) sum -= w;
    std::uint64_t mask = 0;
    table.set(0, sign_of(sum, g.threshold));
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t k = 1; k < total; ++k) {
        const int j = std::countr_zero(k);
        mask ^= std::uint64_t{1} << j;
        const Rational twice = g.weights[static_cast<std::size_t>(j)] + g.weights[static_cast<std::size_t>(j)];
        if ((mask >> j) & 1U) sum += twice;
        else sum -= twice;
        table.set(mask, sign_of(sum, g.threshold));
    }
    return table;
}

TruthTable truth_table(const IntegerGame& g, int cap) {
    const int n = g.size();
    require_enumerable(n, cap);
    TruthTable table(n);
    const int low_bits = n < 6 ? n : 6;
    const int high_bits = n - low_bits;

    std::vector<std::int64_t> low(std::size_t{1} << low_bits);
    for (std::size_t l = 0; l < low.size(); ++l) {
        std::int64_t s = 0;
        for (int i = 0; i < low_bits; ++i) s += ((l >> i) & 1U) ? g.weights[i] : -g.weights[i];
        low[l] = s;
    }
    std::vector<std::int64_t> high(std::size_t{1} << high_bits);
    std::int64_t base = 0;
    for (int i = low_bits; i < n; ++i) base -= g.weights[static_cast<std::size_t>(i)];
    high[0] = base;
    for (std::size_t h = 1; h < high.size(); ++h) {
        const int j = std::countr_zero(h);
        high[h] = high[h & (h - 1)] + 2 * g.weights[static_cast<std::size_t>(low_bits + j)];
    }
    kernels::threshold_words(high, low, g.threshold, table.words());
    return table;
}

TruthTable truth_table(const WeightedGame& g, int cap) {
    if (auto scaled = scale_to_integers(g)) return truth_table(*scaled, cap);
    return truth_table_exact(g, cap);
}

} // namespace svf
