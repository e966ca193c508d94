#include "kodag/sequence.hpp"

#include <charconv>

#include "kodag/errors.hpp"

namespace kodag {

namespace {

long long parse_ll(std::string_view tok, std::string_view what) {
    long long v = 0;
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || tok.empty()) {
        throw ConfigError("invalid " + std::string(what) + " '" +
                          std::string(tok) + "'");
    }
    return v;
}

} // namespace

Sequence::Sequence(Kind kind, bool with_root, long long param,
                   std::vector<long long> list)
    : kind_(kind), with_root_(with_root), param_(param),
      list_(std::move(list)) {}

Sequence Sequence::naturals() { return Sequence(Kind::Naturals, false, 0, {}); }

Sequence Sequence::fibonacci() {
    return Sequence(Kind::Fibonacci, false, 0, {});
}

Sequence Sequence::gaussian(long long q) {
    if (q < 2) throw ConfigError("gaussian base must be >= 2");
    return Sequence(Kind::Gaussian, false, q, {});
}

Sequence Sequence::constant(long long c) {
    if (c < 1) throw ConfigError("constant level size must be >= 1");
    return Sequence(Kind::Constant, false, c, {});
}

Sequence Sequence::explicit_list(std::vector<long long> terms) {
    if (terms.empty()) throw ConfigError("explicit sequence must be nonempty");
    for (long long t : terms) {
        if (t < 1) throw ConfigError("explicit sequence entries must be >= 1");
    }
    return Sequence(Kind::Explicit, false, 0, std::move(terms));
}

Sequence Sequence::with_root() const {
    Sequence s = *this;
    s.with_root_ = true;
    return s;
}

Sequence Sequence::parse(std::string_view spec) {
    if (spec == "nat") return naturals();
    if (spec == "fib") return fibonacci();
    if (spec == "fib+root") return fibonacci().with_root();
    if (spec.rfind("gauss:", 0) == 0) {
        long long q = parse_ll(spec.substr(6), "gaussian base");
        if (q < 2) {
            throw ConfigError("invalid gaussian base '" +
                              std::string(spec.substr(6)) + "' (must be >= 2)");
        }
        return gaussian(q);
    }
    if (spec.rfind("const:", 0) == 0) {
        long long c = parse_ll(spec.substr(6), "constant level size");
        if (c < 1) {
            throw ConfigError("invalid constant level size '" +
                              std::string(spec.substr(6)) + "' (must be >= 1)");
        }
        return constant(c);
    }
    if (spec.rfind("list:", 0) == 0) {
        std::string_view rest = spec.substr(5);
        std::vector<long long> terms;
        while (!rest.empty()) {
            size_t comma = rest.find(',');
            std::string_view tok = rest.substr(0, comma);
            long long t = parse_ll(tok, "list entry");
            if (t < 1) {
                throw ConfigError("invalid list entry '" + std::string(tok) +
                                  "' (must be >= 1)");
            }
            terms.push_back(t);
            if (comma == std::string_view::npos) break;
            rest.remove_prefix(comma + 1);
            if (rest.empty()) throw ConfigError("invalid list entry ''");
        }
        if (terms.empty()) throw ConfigError("invalid list entry ''");
        return explicit_list(std::move(terms));
    }
    throw ConfigError("unknown sequence spec '" + std::string(spec) + "'");
}

std::string Sequence::spec_string() const {
    std::string base;
    switch (kind_) {
    case Kind::Naturals: base = "nat"; break;
    case Kind::Fibonacci: base = "fib"; break;
    case Kind::Gaussian: base = "gauss:" + std::to_string(param_); break;
    case Kind::Constant: base = "const:" + std::to_string(param_); break;
    case Kind::Explicit: {
        base = "list:";
        for (size_t i = 0; i < list_.size(); ++i) {
            if (i) base += ',';
            base += std::to_string(list_[i]);
        }
        break;
    }
    }
    if (with_root_) base += "+root";
    return base;
}

BigInt Sequence::base_term(int k) const {
    switch (kind_) {
    case Kind::Naturals:
        return k;
    case Kind::Fibonacci: {
        BigInt a = 1, b = 1; // F_1, F_2
        for (int i = 1; i < k; ++i) {
            BigInt next = a + b;
            a = b;
            b = next;
        }
        return a;
    }
    case Kind::Gaussian: {
        // 1 + q + ... + q^(k-1)
        BigInt sum = 0, pw = 1;
        for (int i = 0; i < k; ++i) {
            sum += pw;
            pw *= param_;
        }
        return sum;
    }
    case Kind::Constant:
        return param_;
    case Kind::Explicit:
        if (k > static_cast<int>(list_.size())) {
            throw DomainError("explicit sequence exhausted: level " +
                              std::to_string(k) + " beyond list of " +
                              std::to_string(list_.size()));
        }
        return list_[static_cast<size_t>(k) - 1];
    }
    throw DomainError("unreachable sequence kind");
}

BigInt Sequence::term(int k) const {
    if (k < 1) throw DomainError("level index must be >= 1");
    if (with_root_) {
        if (k == 1) return 1;
        return base_term(k - 1);
    }
    return base_term(k);
}

BigInt Sequence::cumulative(int k) const {
    if (k < 0) throw DomainError("cumulative index must be >= 0");
    BigInt sum = 0;
    for (int j = 1; j <= k; ++j) sum += term(j);
    return sum;
}

BigInt Sequence::ffactorial(int n) const {
    if (n < 0) throw DomainError("factorial index must be >= 0");
    BigInt prod = 1;
    for (int j = 1; j <= n; ++j) prod *= term(j);
    return prod;
}

BigInt Sequence::falling(int n, int k) const {
    if (k < 0 || k > n) {
        throw DomainError("falling product requires 0 <= k <= n, got n=" +
                          std::to_string(n) + " k=" + std::to_string(k));
    }
    BigInt prod = 1;
    for (int j = n - k + 1; j <= n; ++j) prod *= term(j);
    return prod;
}

FNomial Sequence::fnomial(int n, int k) const {
    if (k < 0 || k > n) {
        throw DomainError("fnomial requires 0 <= k <= n, got n=" +
                          std::to_string(n) + " k=" + std::to_string(k));
    }
    BigRat value(falling(n, k), ffactorial(k)); // reduces on construction
    return FNomial{numerator(value), denominator(value)};
}

AdmissibilityReport Sequence::is_admissible(int n_max) const {
    if (n_max < 0) throw DomainError("admissibility bound must be >= 0");
    for (int n = 0; n <= n_max; ++n) {
        for (int k = 0; k <= n; ++k) {
            if (!fnomial(n, k).integral()) {
                return AdmissibilityReport{false, n, k};
            }
        }
    }
    return AdmissibilityReport{};
}

} // namespace kodag
