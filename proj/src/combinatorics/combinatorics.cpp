#include "fockasym/combinatorics.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "fockasym/errors.hpp"

namespace fockasym {

IntegerPartition::IntegerPartition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) {
        parts_.pop_back();
    }
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) {
            throw InputError("partition has a negative part");
        }
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw InputError("partition parts must be weakly decreasing");
        }
    }
}

IntegerPartition IntegerPartition::parse(std::string_view text) {
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string_view::npos) {
            comma = text.size();
        }
        std::string_view tok = text.substr(pos, comma - pos);
        while (!tok.empty() && tok.front() == ' ') {
            tok.remove_prefix(1);
        }
        while (!tok.empty() && tok.back() == ' ') {
            tok.remove_suffix(1);
        }
        if (tok.empty()) {
            if (!(text.find_first_not_of(' ') == std::string_view::npos)) {
                throw ParseError("empty part in partition '" + std::string(text) + "'");
            }
        } else {
            int v = 0;
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
            if (ec != std::errc() || ptr != tok.data() + tok.size()) {
                throw ParseError("bad partition part '" + std::string(tok) + "'");
            }
            parts.push_back(v);
        }
        pos = comma + 1;
    }
    try {
        return IntegerPartition(std::move(parts));
    } catch (const InputError& e) {
        throw ParseError(e.what());
    }
}

int IntegerPartition::weight() const {
    int w = 0;
    for (int p : parts_) {
        w += p;
    }
    return w;
}

bool IntegerPartition::contained_in(const IntegerPartition& other) const {
    if (length() > other.length()) {
        return false;
    }
    for (std::size_t i = 0; i < length(); ++i) {
        if (parts_[i] > other.parts_[i]) {
            return false;
        }
    }
    return true;
}

std::string IntegerPartition::str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        os << (i ? "," : "") << parts_[i];
    }
    os << ')';
    return os.str();
}

Signature::Signature(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {
    if (entries_.empty()) {
        throw InputError("signature must have positive length");
    }
    for (std::size_t i = 1; i < entries_.size(); ++i) {
        if (entries_[i] > entries_[i - 1]) {
            throw InputError("signature entries must be weakly decreasing");
        }
    }
}

Signature Signature::from_partition(const IntegerPartition& p, std::size_t N) {
    if (p.length() > N) {
        throw InputError("partition " + p.str() + " longer than N=" + std::to_string(N));
    }
    std::vector<std::int64_t> e(N, 0);
    for (std::size_t i = 0; i < p.length(); ++i) {
        e[i] = p[i];
    }
    return Signature(std::move(e));
}

IntegerPartition Signature::positive_part() const {
    std::vector<int> parts;
    for (auto v : entries_) {
        if (v > 0) {
            parts.push_back(static_cast<int>(v));
        }
    }
    return IntegerPartition(std::move(parts));
}

IntegerPartition Signature::negative_part() const {
    std::vector<int> parts;
    for (auto it = entries_.rbegin(); it != entries_.rend(); ++it) {
        if (*it < 0) {
            parts.push_back(static_cast<int>(-*it));
        }
    }
    return IntegerPartition(std::move(parts));
}

std::string Signature::str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        os << (i ? "," : "") << entries_[i];
    }
    os << ')';
    return os.str();
}

bool SetPartition::has_singleton() const {
    return std::any_of(blocks.begin(), blocks.end(), [](const auto& b) { return b.size() == 1; });
}

std::vector<SetPartition> enumerate_set_partitions(int m) {
    if (m < 1 || m > kMaxSetPartitionSize) {
        throw BoundError("set partitions need 1 <= m <= " + std::to_string(kMaxSetPartitionSize) + ", got " +
                         std::to_string(m));
    }
    std::vector<SetPartition> out;
    // restricted-growth string a[0]=0, a[k] <= 1 + max(a[0..k-1])
    std::vector<int> a(static_cast<std::size_t>(m), 0);
    std::vector<int> mx(static_cast<std::size_t>(m), 0);
    while (true) {
        SetPartition p;
        p.blocks.resize(static_cast<std::size_t>(mx[m - 1] + 1));
        for (int k = 0; k < m; ++k) {
            p.blocks[static_cast<std::size_t>(a[k])].push_back(k + 1);
        }
        out.push_back(std::move(p));

        int k = m - 1;
        while (k > 0 && a[k] == mx[k - 1] + 1) {
            --k;
        }
        if (k == 0) {
            break;
        }
        ++a[k];
        mx[k] = std::max(mx[k - 1], a[k]);
        for (int j = k + 1; j < m; ++j) {
            a[j] = 0;
            mx[j] = mx[k];
        }
    }
    return out;
}

namespace {

void pairings_from(std::vector<int>& rest, std::vector<std::vector<int>>& cur, std::vector<SetPartition>& out) {
    if (rest.empty()) {
        SetPartition p{cur};
        out.push_back(std::move(p));
        return;
    }
    const int first = rest.front();
    for (std::size_t k = 1; k < rest.size(); ++k) {
        const int partner = rest[k];
        std::vector<int> next;
        next.reserve(rest.size() - 2);
        for (std::size_t j = 1; j < rest.size(); ++j) {
            if (j != k) {
                next.push_back(rest[j]);
            }
        }
        cur.push_back({first, partner});
        pairings_from(next, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<SetPartition> enumerate_pair_partitions(int m) {
    if (m < 1 || m > kMaxSetPartitionSize) {
        throw BoundError("pair partitions need 1 <= m <= " + std::to_string(kMaxSetPartitionSize));
    }
    std::vector<SetPartition> out;
    if (m % 2 != 0) {
        return out;
    }
    std::vector<int> rest;
    for (int k = 1; k <= m; ++k) {
        rest.push_back(k);
    }
    std::vector<std::vector<int>> cur;
    pairings_from(rest, cur, out);
    return out;
}

IntegerPartition transpose_partition(const IntegerPartition& mu) {
    std::vector<int> t(static_cast<std::size_t>(mu[0]), 0);
    for (int p : mu.parts()) {
        for (int j = 0; j < p; ++j) {
            ++t[static_cast<std::size_t>(j)];
        }
    }
    return IntegerPartition(std::move(t));
}

FrobeniusPair frobenius_coordinates(const IntegerPartition& lambda) {
    const IntegerPartition tr = transpose_partition(lambda);
    FrobeniusPair out;
    const Rational half(1, 2);
    for (std::size_t i = 0; i < lambda.length(); ++i) {
        const int row = lambda[i];
        const int col = tr[i];
        const auto idx = static_cast<int>(i) + 1;
        if (row < idx) {
            break; // past the diagonal
        }
        out.a.push_back(Rational(row - idx) + half);
        out.b.push_back(Rational(col - idx) + half);
    }
    return out;
}

FrobeniusCoordinates frobenius_coordinates(const Signature& lambda) {
    return {frobenius_coordinates(lambda.positive_part()), frobenius_coordinates(lambda.negative_part())};
}

BigInt factorial(int n) {
    if (n < 0) {
        throw DomainError("factorial of a negative number");
    }
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

BigInt binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) {
        return 0;
    }
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

BigInt hook_dimension(const IntegerPartition& lambda, int N) {
    if (lambda.weight() != N) {
        throw InputError("hook_dimension: |lambda| = " + std::to_string(lambda.weight()) + " but N = " +
                         std::to_string(N));
    }
    const IntegerPartition tr = transpose_partition(lambda);
    BigInt hooks = 1;
    for (std::size_t i = 0; i < lambda.length(); ++i) {
        for (int j = 0; j < lambda[i]; ++j) {
            const int arm = lambda[i] - j - 1;
            const int leg = tr[static_cast<std::size_t>(j)] - static_cast<int>(i) - 1;
            hooks *= arm + leg + 1;
        }
    }
    return factorial(N) / hooks;
}

std::int64_t n_stat(const IntegerPartition& mu) {
    std::int64_t s = 0;
    for (std::size_t j = 0; j < mu.length(); ++j) {
        s += static_cast<std::int64_t>(j) * mu[j];
    }
    return s;
}

namespace {

void partitions_rec(int remaining, int maxPart, std::vector<int>& cur, std::vector<IntegerPartition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(remaining, maxPart); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, cur, out);
        cur.pop_back();
    }
}

void subpartitions_rec(const IntegerPartition& mu, std::size_t row, int cap, std::vector<int>& cur,
                       std::vector<IntegerPartition>& out) {
    if (row == mu.length()) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(cap, mu[row]); p >= 0; --p) {
        cur.push_back(p);
        subpartitions_rec(mu, row + 1, p, cur, out);
        cur.pop_back();
    }
}

} // namespace

std::vector<IntegerPartition> partitions_of(int n) {
    if (n < 0) {
        throw DomainError("partitions of a negative number");
    }
    std::vector<IntegerPartition> out;
    std::vector<int> cur;
    partitions_rec(n, n, cur, out);
    return out;
}

std::vector<IntegerPartition> subpartitions(const IntegerPartition& mu) {
    std::vector<IntegerPartition> out;
    std::vector<int> cur;
    subpartitions_rec(mu, 0, mu[0], cur, out);
    return out;
}

bool is_horizontal_strip(const IntegerPartition& outer, const IntegerPartition& inner) {
    if (!inner.contained_in(outer)) {
        return false;
    }
    // interlacing outer_1 >= inner_1 >= outer_2 >= inner_2 >= ...
    for (std::size_t i = 0; i < outer.length(); ++i) {
        if (inner[i] < outer[i + 1]) {
            return false;
        }
    }
    return true;
}

BigInt stirling2(int n, int k) {
    if (n < 0 || k < 0) {
        return 0;
    }
    std::vector<BigInt> row(static_cast<std::size_t>(k) + 1, 0);
    row[0] = 1;
    for (int i = 1; i <= n; ++i) {
        for (int j = std::min(i, k); j >= 1; --j) {
            row[static_cast<std::size_t>(j)] =
                BigInt(j) * row[static_cast<std::size_t>(j)] + row[static_cast<std::size_t>(j) - 1];
        }
        row[0] = 0;
    }
    return row[static_cast<std::size_t>(k)];
}

BigInt bell_number(int n) {
    BigInt s = 0;
    for (int k = 0; k <= n; ++k) {
        s += stirling2(n, k);
    }
    return s;
}

Rational falling_factorial(const Rational& x, int k) {
    Rational r(1);
    for (int j = 0; j < k; ++j) {
        r *= x - Rational(j);
    }
    return r;
}

BigInt falling_factorial(std::int64_t n, int k) {
    BigInt r = 1;
    for (int j = 0; j < k; ++j) {
        const std::int64_t f = n - j;
        if (f == 0) {
            return 0;
        }
        r *= BigInt(static_cast<long>(f));
    }
    return r;
}

IntegerPartition pad_with_ones(const IntegerPartition& rho, int ones) {
    if (ones < 0) {
        throw InputError("cannot pad a partition with a negative number of ones");
    }
    std::vector<int> parts = rho.parts();
    parts.insert(parts.end(), static_cast<std::size_t>(ones), 1);
    return IntegerPartition(std::move(parts));
}

} // namespace fockasym
