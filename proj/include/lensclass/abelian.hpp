/*
   Copyright 2026 The lensclass Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef LENSCLASS_ABELIAN_HPP
#define LENSCLASS_ABELIAN_HPP

// Finitely generated abelian groups with involution: Smith normal form,
// cokernels, coinvariants and Tate cohomology of C_2-actions.
//
// Presentations use the column convention throughout: an IntMatrix M with
// `rows` generators presents Z^rows / (column span of M). An involution on
// the presented group is an integer matrix acting on generator columns.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "lensclass/errors.hpp"
#include "lensclass/integer.hpp"

namespace lensclass {

class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        data_.reserve(rows_ * cols_);
        for (const auto& row : rows) {
            if (row.size() != cols_) throw PreconditionError("IntMatrix: ragged initializer");
            for (long v : row) data_.emplace_back(v);
        }
    }

    static IntMatrix identity(std::size_t n) {
        IntMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }

    static IntMatrix diagonal(std::span<const Integer> entries) {
        IntMatrix m(entries.size(), entries.size());
        for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
        return m;
    }

    static IntMatrix from_columns(std::size_t rows, const std::vector<std::vector<Integer>>& columns) {
        IntMatrix m(rows, columns.size());
        for (std::size_t j = 0; j < columns.size(); ++j) {
            if (columns[j].size() != rows) throw PreconditionError("IntMatrix: column length mismatch");
            for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
        }
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool empty() const noexcept { return data_.empty(); }

    Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::vector<Integer> column(std::size_t j) const {
        std::vector<Integer> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
        return c;
    }

    std::span<const Integer> entries() const noexcept { return data_; }

    bool is_zero() const {
        return std::all_of(data_.begin(), data_.end(), [](const Integer& v) { return v == 0; });
    }

    IntMatrix transposed() const {
        IntMatrix t(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

    friend IntMatrix operator+(const IntMatrix& a, const IntMatrix& b) {
        require_same_shape(a, b);
        IntMatrix r = a;
        for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] += b.data_[i];
        return r;
    }

    friend IntMatrix operator-(const IntMatrix& a, const IntMatrix& b) {
        require_same_shape(a, b);
        IntMatrix r = a;
        for (std::size_t i = 0; i < r.data_.size(); ++i) r.data_[i] -= b.data_[i];
        return r;
    }

    friend IntMatrix operator-(const IntMatrix& a) {
        IntMatrix r = a;
        for (auto& v : r.data_) v = -v;
        return r;
    }

    friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
        if (a.cols_ != b.rows_) throw PreconditionError("IntMatrix: product shape mismatch");
        IntMatrix r(a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t l = 0; l < a.cols_; ++l) {
                const Integer& x = a(i, l);
                if (x == 0) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) r(i, j) += x * b(l, j);
            }
        return r;
    }

    friend std::vector<Integer> operator*(const IntMatrix& a, const std::vector<Integer>& x) {
        if (a.cols_ != x.size()) throw PreconditionError("IntMatrix: vector length mismatch");
        std::vector<Integer> y(a.rows_, 0);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t j = 0; j < a.cols_; ++j) y[i] += a(i, j) * x[j];
        return y;
    }

    /// Horizontal concatenation [a | b].
    friend IntMatrix hconcat(const IntMatrix& a, const IntMatrix& b) {
        if (a.rows_ != b.rows_) throw PreconditionError("IntMatrix: hconcat row mismatch");
        IntMatrix r(a.rows_, a.cols_ + b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i) {
            for (std::size_t j = 0; j < a.cols_; ++j) r(i, j) = a(i, j);
            for (std::size_t j = 0; j < b.cols_; ++j) r(i, a.cols_ + j) = b(i, j);
        }
        return r;
    }

    std::string to_string() const {
        std::ostringstream os;
        os << '[';
        for (std::size_t i = 0; i < rows_; ++i) {
            os << (i ? ",[" : "[");
            for (std::size_t j = 0; j < cols_; ++j) os << (j ? "," : "") << (*this)(i, j);
            os << ']';
        }
        os << ']';
        return os.str();
    }

private:
    static void require_same_shape(const IntMatrix& a, const IntMatrix& b) {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw PreconditionError("IntMatrix: shape mismatch");
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Integer> data_;
};

/// U * M * V == S with U, V unimodular and S diagonal, d_1 | d_2 | ... .
struct SmithForm {
    IntMatrix left;
    IntMatrix diagonal;
    IntMatrix right;

    std::vector<Integer> invariants() const {
        std::vector<Integer> d;
        for (std::size_t i = 0; i < std::min(diagonal.rows(), diagonal.cols()); ++i) d.push_back(diagonal(i, i));
        return d;
    }

    std::size_t rank() const {
        std::size_t r = 0;
        for (const auto& v : invariants()) r += v != 0;
        return r;
    }
};

/// Smith normal form by repeated smallest-magnitude pivoting.
inline SmithForm smith_normal_form(const IntMatrix& m) {
    const std::size_t nr = m.rows(), nc = m.cols();
    IntMatrix s = m;
    IntMatrix u = IntMatrix::identity(nr);
    IntMatrix v = IntMatrix::identity(nc);

    auto swap_rows = [&](std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < nc; ++j) std::swap(s(a, j), s(b, j));
        for (std::size_t j = 0; j < nr; ++j) std::swap(u(a, j), u(b, j));
    };
    auto swap_cols = [&](std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t i = 0; i < nr; ++i) std::swap(s(i, a), s(i, b));
        for (std::size_t i = 0; i < nc; ++i) std::swap(v(i, a), v(i, b));
    };
    // row[dst] -= q * row[src]
    auto sub_row = [&](std::size_t dst, std::size_t src, const Integer& q) {
        for (std::size_t j = 0; j < nc; ++j) s(dst, j) -= q * s(src, j);
        for (std::size_t j = 0; j < nr; ++j) u(dst, j) -= q * u(src, j);
    };
    auto sub_col = [&](std::size_t dst, std::size_t src, const Integer& q) {
        for (std::size_t i = 0; i < nr; ++i) s(i, dst) -= q * s(i, src);
        for (std::size_t i = 0; i < nc; ++i) v(i, dst) -= q * v(i, src);
    };

    const std::size_t steps = std::min(nr, nc);
    for (std::size_t t = 0; t < steps; ++t) {
        bool exhausted = false;
        for (;;) {
            std::optional<std::pair<std::size_t, std::size_t>> best;
            for (std::size_t i = t; i < nr; ++i)
                for (std::size_t j = t; j < nc; ++j)
                    if (s(i, j) != 0 && (!best || ::abs(s(i, j)) < ::abs(s(best->first, best->second))))
                        best = {i, j};
            if (!best) {
                exhausted = true;
                break;
            }
            swap_rows(t, best->first);
            swap_cols(t, best->second);

            bool clean = true;
            for (std::size_t i = t + 1; i < nr; ++i) {
                if (s(i, t) == 0) continue;
                Integer q = s(i, t) / s(t, t);
                sub_row(i, t, q);
                clean = clean && s(i, t) == 0;
            }
            for (std::size_t j = t + 1; j < nc; ++j) {
                if (s(t, j) == 0) continue;
                Integer q = s(t, j) / s(t, t);
                sub_col(j, t, q);
                clean = clean && s(t, j) == 0;
            }
            if (!clean) continue;

            std::optional<std::size_t> offender;
            for (std::size_t i = t + 1; i < nr && !offender; ++i)
                for (std::size_t j = t + 1; j < nc; ++j)
                    if (!divides(s(t, t), s(i, j))) {
                        offender = i;
                        break;
                    }
            if (!offender) break;
            sub_row(t, *offender, Integer(-1));
        }
        if (exhausted) break;
        if (s(t, t) < 0) {
            for (std::size_t j = 0; j < nc; ++j) s(t, j) = -s(t, j);
            for (std::size_t j = 0; j < nr; ++j) u(t, j) = -u(t, j);
        }
    }
    return {std::move(u), std::move(s), std::move(v)};
}

/// A finitely generated abelian group Z^r + Z/d_1 + ... + Z/d_t with
/// 2 <= d_1 | d_2 | ... | d_t. The form is unique, so == is isomorphism.
class FgAbGroup {
public:
    FgAbGroup() = default;

    /// Validating constructor for an already canonical description.
    FgAbGroup(std::size_t free_rank, std::vector<Integer> torsion) : free_rank_(free_rank), torsion_(std::move(torsion)) {
        for (std::size_t i = 0; i < torsion_.size(); ++i) {
            if (torsion_[i] < 2) throw PreconditionError("invariant factors must be >= 2");
            if (i > 0 && !divides(torsion_[i - 1], torsion_[i]))
                throw PreconditionError("invariant factors must form a divisibility chain");
        }
    }

    /// Direct sum of cyclic groups of the given orders (0 means Z, 1 is dropped).
    static FgAbGroup from_cyclic_orders(std::span<const Integer> orders);

    static FgAbGroup free(std::size_t rank) { return FgAbGroup(rank, {}); }

    std::size_t free_rank() const noexcept { return free_rank_; }
    const std::vector<Integer>& torsion() const noexcept { return torsion_; }

    bool is_trivial() const noexcept { return free_rank_ == 0 && torsion_.empty(); }
    bool is_finite() const noexcept { return free_rank_ == 0; }

    std::optional<Integer> order() const {
        if (!is_finite()) return std::nullopt;
        Integer n = 1;
        for (const auto& d : torsion_) n *= d;
        return n;
    }

    /// Every invariant factor equals 2 and the group is finite.
    bool is_elementary_two() const {
        return is_finite() && std::all_of(torsion_.begin(), torsion_.end(), [](const Integer& d) { return d == 2; });
    }

    /// Dimension of G/2G over F_2.
    std::size_t two_rank() const {
        std::size_t r = free_rank_;
        for (const auto& d : torsion_) r += divides(Integer(2), d);
        return r;
    }

    /// Number of elements killed by k in the torsion subgroup.
    Integer torsion_count(const Integer& k) const {
        Integer n = 1;
        for (const auto& d : torsion_) n *= gcd(k, d);
        return n;
    }

    FgAbGroup direct_sum(const FgAbGroup& other) const {
        std::vector<Integer> orders(free_rank_ + other.free_rank_, 0);
        orders.insert(orders.end(), torsion_.begin(), torsion_.end());
        orders.insert(orders.end(), other.torsion_.begin(), other.torsion_.end());
        return from_cyclic_orders(orders);
    }

    /// G / 2G.
    FgAbGroup mod_two() const { return FgAbGroup(0, std::vector<Integer>(two_rank(), 2)); }

    friend bool operator==(const FgAbGroup&, const FgAbGroup&) = default;

    /// "0", "Z^2 + Z/2 + Z/4", ...
    std::string to_string() const {
        if (is_trivial()) return "0";
        std::ostringstream os;
        bool first = true;
        if (free_rank_ > 0) {
            os << "Z";
            if (free_rank_ > 1) os << '^' << free_rank_;
            first = false;
        }
        for (const auto& d : torsion_) {
            os << (first ? "" : " + ") << "Z/" << d;
            first = false;
        }
        return os.str();
    }

    /// Tuple notation for finite groups: "0", "(11)", "(2,2,2)".
    std::string tuple_notation() const {
        if (!is_finite()) return to_string();
        if (torsion_.empty()) return "0";
        std::ostringstream os;
        os << '(';
        for (std::size_t i = 0; i < torsion_.size(); ++i) os << (i ? "," : "") << torsion_[i];
        os << ')';
        return os.str();
    }

private:
    std::size_t free_rank_ = 0;
    std::vector<Integer> torsion_;
};

/// Z^rows / image(m), in canonical form.
inline FgAbGroup cokernel(const IntMatrix& m) {
    const SmithForm snf = smith_normal_form(m);
    std::size_t free_rank = m.rows();
    std::vector<Integer> torsion;
    for (const auto& d : snf.invariants()) {
        if (d == 0) continue;
        --free_rank;
        if (d != 1) torsion.push_back(d);
    }
    return FgAbGroup(free_rank, std::move(torsion));
}

inline FgAbGroup FgAbGroup::from_cyclic_orders(std::span<const Integer> orders) {
    std::vector<Integer> abs_orders;
    abs_orders.reserve(orders.size());
    for (const auto& o : orders) abs_orders.push_back(::abs(o));
    return cokernel(IntMatrix::diagonal(abs_orders));
}

namespace lattice {

/// Basis (as columns) of the integer kernel {x : a x = 0}.
inline IntMatrix kernel(const IntMatrix& a) {
    const SmithForm snf = smith_normal_form(a);
    const std::size_t r = snf.rank();
    IntMatrix k(a.cols(), a.cols() - r);
    for (std::size_t i = 0; i < a.cols(); ++i)
        for (std::size_t j = r; j < a.cols(); ++j) k(i, j - r) = snf.right(i, j);
    return k;
}

/// Membership of x in the column span of the matrix whose Smith form is given.
inline bool contains(const SmithForm& snf, const std::vector<Integer>& x) {
    const std::vector<Integer> w = snf.left * x;
    const auto d = snf.invariants();
    for (std::size_t i = 0; i < w.size(); ++i) {
        const Integer di = i < d.size() ? d[i] : Integer(0);
        if (!divides(di, w[i])) return false;
    }
    return true;
}

/// Column span of `numerator` modulo column span of `denominator`.
/// Throws ConsistencyError when the denominator is not a sublattice.
inline FgAbGroup subquotient(const IntMatrix& numerator, const IntMatrix& denominator) {
    if (numerator.rows() != denominator.rows()) throw PreconditionError("subquotient: ambient rank mismatch");
    const SmithForm snf = smith_normal_form(numerator);
    const auto d = snf.invariants();
    const std::size_t r = snf.rank();
    // Coordinates of the denominator generators in the basis left^{-1} * diag(d) of the numerator.
    IntMatrix coords(r, denominator.cols());
    for (std::size_t j = 0; j < denominator.cols(); ++j) {
        const std::vector<Integer> w = snf.left * denominator.column(j);
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i < r) {
                if (!divides(d[i], w[i])) throw ConsistencyError("subquotient: denominator not contained in numerator");
                coords(i, j) = w[i] / d[i];
            } else if (w[i] != 0) {
                throw ConsistencyError("subquotient: denominator not contained in numerator");
            }
        }
    }
    return cokernel(coords);
}

}  // namespace lattice

/// A presented abelian group A = Z^n / im(relations) with an involution.
/// Validity (the action preserves the relations and squares to the
/// identity on A) is checked on construction.
class GroupWithInvolution {
public:
    GroupWithInvolution(IntMatrix relations, IntMatrix action)
        : relations_(std::move(relations)), action_(std::move(action)) {
        const std::size_t n = relations_.rows();
        if (action_.rows() != n || action_.cols() != n)
            throw PreconditionError("involution matrix must be square on the generators");
        const SmithForm snf = smith_normal_form(relations_);
        const IntMatrix moved = action_ * relations_;
        for (std::size_t j = 0; j < moved.cols(); ++j)
            if (!lattice::contains(snf, moved.column(j)))
                throw PreconditionError("invalid involution: relation lattice not preserved");
        const IntMatrix square = action_ * action_ - IntMatrix::identity(n);
        for (std::size_t j = 0; j < n; ++j)
            if (!lattice::contains(snf, square.column(j)))
                throw PreconditionError("invalid involution: square is not the identity on the group");
    }

    /// Z/o_1 + ... + Z/o_n on the standard generators (o_i = 0 gives Z).
    static GroupWithInvolution diagonal(std::span<const Integer> orders, IntMatrix action) {
        return GroupWithInvolution(IntMatrix::diagonal(orders), std::move(action));
    }

    std::size_t generators() const noexcept { return relations_.rows(); }
    const IntMatrix& relations() const noexcept { return relations_; }
    const IntMatrix& action() const noexcept { return action_; }

    FgAbGroup group() const { return cokernel(relations_); }

    GroupWithInvolution negated() const { return GroupWithInvolution(relations_, -action_); }

    /// Lattice {x in Z^n : f x in im(relations)} spanning the kernel of f on A.
    IntMatrix kernel_lattice(const IntMatrix& f) const {
        const std::size_t n = generators();
        const IntMatrix stacked = hconcat(f, -relations_);
        const IntMatrix k = lattice::kernel(stacked);
        IntMatrix proj(n, k.cols());
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < k.cols(); ++j) proj(i, j) = k(i, j);
        return hconcat(proj, relations_);
    }

    /// Lattice spanning im(f) + relations.
    IntMatrix image_lattice(const IntMatrix& f) const { return hconcat(f, relations_); }

    /// ker(f) / im(g) on A; requires f g = 0 on A.
    FgAbGroup homology(const IntMatrix& f, const IntMatrix& g) const {
        return lattice::subquotient(kernel_lattice(f), image_lattice(g));
    }

private:
    IntMatrix relations_;
    IntMatrix action_;
};

/// H_0(C_2; A) = A / (1 - i)A.
inline FgAbGroup coinvariants(const GroupWithInvolution& g) {
    const IntMatrix one_minus = IntMatrix::identity(g.generators()) - g.action();
    return cokernel(hconcat(g.relations(), one_minus));
}

/// Tate cohomology of the C_2-action: parity 0 gives ker(1-i)/im(1+i),
/// parity 1 gives ker(1+i)/im(1-i). The result is always killed by 2.
inline FgAbGroup tate_cohomology(const GroupWithInvolution& g, int parity) {
    if (parity != 0 && parity != 1) throw PreconditionError("tate_cohomology: parity must be 0 or 1");
    const IntMatrix id = IntMatrix::identity(g.generators());
    const IntMatrix plus = id + g.action();
    const IntMatrix minus = id - g.action();
    FgAbGroup h = parity == 0 ? g.homology(minus, plus) : g.homology(plus, minus);
    if (!h.is_elementary_two()) throw ConsistencyError("Tate cohomology is not an elementary 2-group: " + h.to_string());
    return h;
}

/// {a : a = s i(a)} / {b + s i(b)} for the sign s = +1 or -1.
inline FgAbGroup symmetric_even_quotient(const GroupWithInvolution& g, int sign) {
    if (sign != 1 && sign != -1) throw PreconditionError("symmetric_even_quotient: sign must be +1 or -1");
    const IntMatrix id = IntMatrix::identity(g.generators());
    const IntMatrix signed_action = sign == 1 ? g.action() : IntMatrix(-g.action());
    const IntMatrix symmetric = id - signed_action;
    const IntMatrix even = id + signed_action;
    return lattice::subquotient(g.kernel_lattice(symmetric), g.image_lattice(even));
}

}  // namespace lensclass

#endif
