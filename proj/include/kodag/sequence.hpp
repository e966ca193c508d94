#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "kodag/bigint.hpp"

namespace kodag {

/// Exact value of an F-nomial coefficient, kept as a fully reduced fraction.
/// Integrality is a computed property, never an assumption.
struct FNomial {
    BigInt numerator;
    BigInt denominator; // always >= 1

    bool integral() const { return denominator == 1; }
    BigRat value() const { return BigRat(numerator, denominator); }
    bool operator==(const FNomial&) const = default;
};

struct AdmissibilityReport {
    bool admissible = true;
    // Lexicographically first (n, k) with a non-integral coefficient,
    // populated when admissible is false.
    int violation_n = -1;
    int violation_k = -1;
};

/// Generator of positive level sizes k_F, written in upside-down notation:
/// term(k) is the size of level k, with levels indexed from 1.
///
/// Built-ins: naturals (1,2,3,...), fibonacci (1,1,2,3,5,...), the Gaussian
/// q-integers (1, 1+q, 1+q+q^2, ...), a constant, or an explicit list.
/// with_root() prepends one extra level of size 1 before index 1.
class Sequence {
public:
    enum class Kind { Naturals, Fibonacci, Gaussian, Constant, Explicit };

    static Sequence naturals();
    static Sequence fibonacci();
    static Sequence gaussian(long long q);                 // q >= 2
    static Sequence constant(long long c);                 // c >= 1
    static Sequence explicit_list(std::vector<long long>); // nonempty, all >= 1

    /// A copy of this sequence with a size-1 root level prepended.
    Sequence with_root() const;

    /// Parses a sequence spec string. Accepted forms (case-sensitive):
    ///   nat | fib | fib+root | gauss:Q (Q >= 2) | const:C (C >= 1)
    ///   | list:a,b,c,... (decimal, all >= 1)
    /// Throws ConfigError naming the offending token otherwise.
    static Sequence parse(std::string_view spec);

    /// Canonical spec string for display and reports.
    std::string spec_string() const;

    Kind kind() const { return kind_; }
    bool has_root() const { return with_root_; }

    /// k_F, the size of level k (k >= 1). Explicit sequences throw
    /// DomainError once the list is exhausted.
    BigInt term(int k) const;

    /// S(k) = sum of term(1..k); S(0) = 0.
    BigInt cumulative(int k) const;

    /// n_F! = term(1) * ... * term(n); 0_F! = 1.
    BigInt ffactorial(int n) const;

    /// Falling product n_F * (n-1)_F * ... * (n-k+1)_F; empty product is 1.
    /// Requires 0 <= k <= n.
    BigInt falling(int n, int k) const;

    /// F-nomial coefficient falling(n, k) / k_F! as an exact reduced
    /// fraction. Requires 0 <= k <= n.
    FNomial fnomial(int n, int k) const;

    /// True iff fnomial(n, k) is integral for all 0 <= k <= n <= n_max;
    /// otherwise reports the lexicographically smallest violation.
    AdmissibilityReport is_admissible(int n_max) const;

private:
    Sequence(Kind kind, bool with_root, long long param,
             std::vector<long long> list);

    BigInt base_term(int k) const; // term before the with_root shift

    Kind kind_;
    bool with_root_ = false;
    long long param_ = 0; // q for Gaussian, c for Constant
    std::vector<long long> list_;
};

} // namespace kodag
