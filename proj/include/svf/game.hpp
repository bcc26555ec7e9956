#pragma once

#include "svf/rational.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace svf {

// sign(z) = +1 for z >= 0. Building with SVF_MUTATE_SIGN_AT_ZERO flips the
// tie rule; only the mutation-testing targets do that.
#ifdef SVF_MUTATE_SIGN_AT_ZERO
inline constexpr int kSignAtZero = -1;
#else
inline constexpr int kSignAtZero = +1;
#endif

template <typename T>
constexpr int sign_of(const T& margin, const T& zero) {
    if (margin > zero) return 1;
    if (margin < zero) return -1;
    return kSignAtZero;
}

/// Largest player count any exhaustive routine will accept.
inline constexpr int kDefaultEnumerationCap = 20;

/// p^n = (p_0, ..., p_{n-1}) with p_t >= 0 and sum_t C(n-1, t) p_t = 1.
class ProbabilityVector {
public:
    /// Validates and builds; throws NegativeEntry / NormalizationViolated / EmptyInput.
    static ProbabilityVector make(std::vector<Rational> entries);

    int size() const noexcept { return static_cast<int>(entries_.size()); }
    std::span<const Rational> entries() const noexcept { return entries_; }

    /// p_t, with p_t = 0 for t < 0 or t >= n.
    const Rational& at(int t) const noexcept;

    friend bool operator==(const ProbabilityVector&, const ProbabilityVector&) = default;

private:
    explicit ProbabilityVector(std::vector<Rational> entries) : entries_(std::move(entries)) {}
    std::vector<Rational> entries_;
};

ProbabilityVector make_probability_vector(std::vector<Rational> entries);

/// "banzhaf" or "shapley"; throws UnknownPreset.
ProbabilityVector preset_probability_vector(std::string_view name, int n);

/// True iff some t with alpha*n <= t <= (1-beta)*n has p_t > 0.
bool is_reasonable(const ProbabilityVector& p, const Rational& alpha = Rational(1, 4),
                   const Rational& beta = Rational(1, 4));

/// f_{w,theta}(x) = sign(w . x - theta) over {-1,+1}^n.
struct WeightedGame {
    std::vector<Rational> weights;
    Rational threshold;

    int size() const noexcept { return static_cast<int>(weights.size()); }
    friend bool operator==(const WeightedGame&, const WeightedGame&) = default;
};

/// Point of {-1,+1}^n stored as a bitmask: bit i set iff x_i = +1.
class Assignment {
public:
    Assignment(int n, std::uint64_t mask);
    static Assignment from_signs(std::span<const int> signs);

    int size() const noexcept { return n_; }
    std::uint64_t mask() const noexcept { return mask_; }
    int operator[](int i) const noexcept { return (mask_ >> i) & 1U ? 1 : -1; }
    /// Number of +1 coordinates.
    int weight() const noexcept;
    Assignment flipped(int i) const noexcept { return Assignment(n_, mask_ ^ (std::uint64_t{1} << i)); }
    std::vector<int> signs() const;

private:
    int n_;
    std::uint64_t mask_;
};

/// Exact w . x.
Rational dot(std::span<const Rational> w, const Assignment& x);

/// sign(w . x - theta); throws DimensionMismatch.
int eval_game(const WeightedGame& g, const Assignment& x);

/// mu'(x) = p_{wt(x)} + p_{wt(x)-1}.
Rational mu_prime(const ProbabilityVector& p, const Assignment& x);
Rational mu_prime(const ProbabilityVector& p, int weight_class);

/// Lambda(p) = sum_t C(n,t) (p_t + p_{t-1}).
Rational lambda_norm(const ProbabilityVector& p);

/// The distribution mu = mu' / Lambda on {-1,+1}^n induced by p.
class InducedDistribution {
public:
    explicit InducedDistribution(ProbabilityVector base);

    const ProbabilityVector& base() const noexcept { return base_; }
    const Rational& lambda() const noexcept { return lambda_; }
    int size() const noexcept { return base_.size(); }

    /// Unnormalized mass of any single point of the given weight class.
    Rational class_mass(int weight_class) const { return mu_prime(base_, weight_class); }
    Rational probability(const Assignment& x) const;

private:
    ProbabilityVector base_;
    Rational lambda_;
};

/// Game with int64 coefficients; produced by clearing denominators.
struct IntegerGame {
    std::vector<std::int64_t> weights;
    std::int64_t threshold = 0;

    int size() const noexcept { return static_cast<int>(weights.size()); }
};

/// Multiplies weights and threshold by the LCM of their denominators. Returns
/// nullopt when sum |w_i| + |theta| does not stay below 2^62.
std::optional<IntegerGame> scale_to_integers(const WeightedGame& g);

/// Packed truth table of a Boolean function on {-1,+1}^n. Bit `mask` is set
/// iff f evaluates to +1 at the assignment with that mask.
class TruthTable {
public:
    explicit TruthTable(int n);

    int size() const noexcept { return n_; }
    std::uint64_t points() const noexcept { return std::uint64_t{1} << n_; }
    int value(std::uint64_t mask) const noexcept { return (words_[mask >> 6] >> (mask & 63)) & 1U ? 1 : -1; }
    void set(std::uint64_t mask, int value) noexcept;

    std::span<std::uint64_t> words() noexcept { return words_; }
    std::span<const std::uint64_t> words() const noexcept { return words_; }

    std::size_t hash() const noexcept;
    friend bool operator==(const TruthTable&, const TruthTable&) = default;

private:
    int n_;
    std::vector<std::uint64_t> words_;
};

struct TruthTableHash {
    std::size_t operator()(const TruthTable& t) const noexcept { return t.hash(); }
};

/// Truth table by exhaustive exact-rational evaluation (Gray-code walk).
TruthTable truth_table_exact(const WeightedGame& g, int cap = kDefaultEnumerationCap);

/// Truth table of an integer game using the vectorised kernels.
TruthTable truth_table(const IntegerGame& g, int cap = kDefaultEnumerationCap);

/// Uses the integer kernels whenever the game scales into int64, otherwise
/// falls back to truth_table_exact.
TruthTable truth_table(const WeightedGame& g, int cap = kDefaultEnumerationCap);

/// Throws InstanceTooLarge when n exceeds cap (or 63).
void require_enumerable(int n, int cap);

} // namespace svf
