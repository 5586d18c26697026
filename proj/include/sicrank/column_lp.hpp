#pragma once

#include "sicrank/rational.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sicrank {

namespace detail {

template <typename S>
struct LpTolerance;

template <>
struct LpTolerance<double> {
    static bool negative_reduced_cost(double d) { return d < -1e-10; }
    static bool usable_pivot(double u) { return u > 1e-9; }
    static bool zero_step(double r) { return r <= 1e-12; }
    static double clamp_basic(double x) { return x < 0.0 && x > -1e-9 ? 0.0 : x; }
    static bool infeasible(double x) { return x < -1e-7; }
    static double abs(double x) { return std::fabs(x); }
    static bool tie(double a, double b) { return std::fabs(a - b) <= 1e-12; }
    static bool tiny_pivot(double x) { return std::fabs(x) < 1e-12; }
    static constexpr bool exact = false;
};

template <>
struct LpTolerance<Rational> {
    static bool negative_reduced_cost(const Rational& d) { return d.sign() < 0; }
    static bool usable_pivot(const Rational& u) { return u.sign() > 0; }
    static bool zero_step(const Rational& r) { return r.sign() == 0; }
    static Rational clamp_basic(const Rational& x) { return x; }
    static bool infeasible(const Rational& x) { return x.sign() < 0; }
    static Rational abs(const Rational& x) { return x.abs(); }
    static bool tie(const Rational& a, const Rational& b) { return a == b; }
    static bool tiny_pivot(const Rational& x) { return x.sign() == 0; }
    static constexpr bool exact = true;
};

} // namespace detail

/// Revised primal simplex for   min c.x  s.t.  A x = b, x >= 0   where columns
/// are added over time (column generation). The caller supplies a feasible
/// starting basis; added columns keep the current basis feasible, so each
/// optimize() call warm-starts. S is double or Rational.
template <typename S>
class ColumnLp {
public:
    struct Entry {
        std::size_t row;
        S value;
    };

    enum class Status { optimal, pivot_limit };

    explicit ColumnLp(std::vector<S> rhs) : rhs_(std::move(rhs)), m_(rhs_.size()) {}

    std::size_t rows() const { return m_; }
    std::size_t columns() const { return cols_.size(); }

    std::size_t add_column(std::vector<Entry> entries, S cost)
    {
        for (const auto& e : entries)
            if (e.row >= m_)
                throw std::out_of_range("ColumnLp::add_column: row out of range");
        cols_.push_back(Column{std::move(entries), std::move(cost)});
        position_.push_back(npos);
        return cols_.size() - 1;
    }

    /// Installs the basis (one column per row). Throws if singular or infeasible.
    void set_basis(const std::vector<std::size_t>& basic)
    {
        if (basic.size() != m_)
            throw std::invalid_argument("ColumnLp::set_basis: need one column per row");
        for (auto& p : position_)
            p = npos;
        basis_ = basic;
        for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] >= cols_.size() || position_[basis_[i]] != npos)
                throw std::invalid_argument("ColumnLp::set_basis: bad or repeated column");
            position_[basis_[i]] = i;
        }
        refactor();
        for (std::size_t i = 0; i < m_; ++i)
            if (detail::LpTolerance<S>::infeasible(xb_[i]))
                throw std::invalid_argument("ColumnLp::set_basis: basis is not primal feasible");
        compute_duals();
    }

    Status optimize(std::size_t max_pivots = 1000000)
    {
        using T = detail::LpTolerance<S>;
        std::size_t degenerate_run = 0;
        for (std::size_t it = 0; it < max_pivots; ++it) {
            compute_duals();
            const bool bland = degenerate_run > 30;
            std::size_t enter = npos;
            S best{};
            for (std::size_t j = 0; j < cols_.size(); ++j) {
                if (position_[j] != npos)
                    continue;
                S d = reduced_cost(j);
                if (!T::negative_reduced_cost(d))
                    continue;
                if (bland) {
                    enter = j;
                    break;
                }
                if (enter == npos || d < best) {
                    enter = j;
                    best = d;
                }
            }
            if (enter == npos)
                return Status::optimal;

            std::vector<S> u = ftran(enter);
            std::size_t leave = npos;
            S best_ratio{};
            if constexpr (!T::exact) {
                if (!bland) {
                    // Harris two-pass test: among near-minimal ratios take the largest pivot.
                    double bound = std::numeric_limits<double>::infinity();
                    for (std::size_t i = 0; i < m_; ++i)
                        if (T::usable_pivot(u[i]))
                            bound = std::min(bound, (std::max(xb_[i], 0.0) + kHarrisSlack) / u[i]);
                    for (std::size_t i = 0; i < m_; ++i)
                        if (T::usable_pivot(u[i]) && std::max(xb_[i], 0.0) / u[i] <= bound &&
                            (leave == npos || u[i] > u[leave]))
                            leave = i;
                    if (leave != npos)
                        best_ratio = std::max(xb_[leave], 0.0) / u[leave];
                }
            }
            if (leave == npos)
                for (std::size_t i = 0; i < m_; ++i) {
                    if (!T::usable_pivot(u[i]))
                        continue;
                    S ratio = xb_[i] / u[i];
                    if (leave == npos || ratio < best_ratio) {
                        leave = i;
                        best_ratio = ratio;
                    } else if (T::tie(ratio, best_ratio)) {
                        if (bland ? basis_[i] < basis_[leave] : T::abs(u[leave]) < T::abs(u[i]))
                            leave = i;
                    }
                }
            if (leave == npos)
                throw std::runtime_error("ColumnLp: unbounded");
            degenerate_run = T::zero_step(best_ratio) ? degenerate_run + 1 : 0;
            pivot(leave, enter, u);
            if constexpr (!T::exact) {
                if (++pivots_since_refactor_ >= 64)
                    refactor();
            }
        }
        compute_duals();
        return Status::pivot_limit;
    }

    /// Simplex multipliers y = c_B B^{-1}, valid after optimize() / set_basis().
    const std::vector<S>& duals() const { return y_; }

    S objective() const
    {
        S z{};
        for (std::size_t i = 0; i < m_; ++i)
            z += cols_[basis_[i]].cost * xb_[i];
        return z;
    }

    S value(std::size_t col) const { return position_[col] == npos ? S{} : xb_[position_[col]]; }
    bool is_basic(std::size_t col) const { return position_[col] != npos; }
    const std::vector<std::size_t>& basis() const { return basis_; }
    const std::vector<Entry>& column(std::size_t col) const { return cols_[col].entries; }
    const S& cost(std::size_t col) const { return cols_[col].cost; }

    S reduced_cost(std::size_t j) const
    {
        S d = cols_[j].cost;
        for (const auto& e : cols_[j].entries)
            d -= y_[e.row] * e.value;
        return d;
    }

private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    static constexpr double kHarrisSlack = 1e-9;

    struct Column {
        std::vector<Entry> entries;
        S cost;
    };

    S& binv(std::size_t i, std::size_t j) { return binv_[i * m_ + j]; }
    const S& binv(std::size_t i, std::size_t j) const { return binv_[i * m_ + j]; }

    std::vector<S> ftran(std::size_t col) const
    {
        std::vector<S> u(m_, S{});
        for (const auto& e : cols_[col].entries)
            for (std::size_t i = 0; i < m_; ++i)
                u[i] += binv(i, e.row) * e.value;
        return u;
    }

    void compute_duals()
    {
        y_.assign(m_, S{});
        for (std::size_t i = 0; i < m_; ++i) {
            const S& c = cols_[basis_[i]].cost;
            if (c == S{})
                continue;
            for (std::size_t j = 0; j < m_; ++j)
                y_[j] += c * binv(i, j);
        }
    }

    void pivot(std::size_t r, std::size_t enter, const std::vector<S>& u)
    {
        const S piv = u[r];
        for (std::size_t j = 0; j < m_; ++j)
            binv(r, j) /= piv;
        xb_[r] /= piv;
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == r || u[i] == S{})
                continue;
            const S f = u[i];
            for (std::size_t j = 0; j < m_; ++j)
                if (!(binv(r, j) == S{}))
                    binv(i, j) -= f * binv(r, j);
            xb_[i] -= f * xb_[r];
            xb_[i] = detail::LpTolerance<S>::clamp_basic(xb_[i]);
        }
        position_[basis_[r]] = npos;
        basis_[r] = enter;
        position_[enter] = r;
    }

    // Gauss-Jordan inverse of the basis matrix with partial pivoting.
    void refactor()
    {
        using T = detail::LpTolerance<S>;
        pivots_since_refactor_ = 0;
        std::vector<S> a(m_ * m_, S{});
        for (std::size_t i = 0; i < m_; ++i)
            for (const auto& e : cols_[basis_[i]].entries)
                a[e.row * m_ + i] = e.value;
        binv_.assign(m_ * m_, S{});
        for (std::size_t i = 0; i < m_; ++i)
            binv(i, i) = S(1);
        for (std::size_t c = 0; c < m_; ++c) {
            std::size_t p = m_;
            for (std::size_t r = c; r < m_; ++r) {
                if (a[r * m_ + c] == S{})
                    continue;
                if (p == m_ || T::abs(a[p * m_ + c]) < T::abs(a[r * m_ + c]))
                    p = r;
                if constexpr (T::exact)
                    break;
            }
            if (p == m_ || T::tiny_pivot(a[p * m_ + c]))
                throw std::runtime_error("ColumnLp: singular basis");
            if (p != c)
                for (std::size_t j = 0; j < m_; ++j) {
                    std::swap(a[p * m_ + j], a[c * m_ + j]);
                    std::swap(binv(p, j), binv(c, j));
                }
            const S piv = a[c * m_ + c];
            for (std::size_t j = 0; j < m_; ++j) {
                a[c * m_ + j] /= piv;
                binv(c, j) /= piv;
            }
            for (std::size_t r = 0; r < m_; ++r) {
                if (r == c || a[r * m_ + c] == S{})
                    continue;
                const S f = a[r * m_ + c];
                for (std::size_t j = 0; j < m_; ++j) {
                    a[r * m_ + j] -= f * a[c * m_ + j];
                    binv(r, j) -= f * binv(c, j);
                }
            }
        }
        xb_.assign(m_, S{});
        for (std::size_t i = 0; i < m_; ++i) {
            for (std::size_t j = 0; j < m_; ++j)
                if (!(rhs_[j] == S{}))
                    xb_[i] += binv(i, j) * rhs_[j];
            xb_[i] = T::clamp_basic(xb_[i]);
        }
    }

    std::vector<S> rhs_;
    std::size_t m_;
    std::vector<Column> cols_;
    std::vector<std::size_t> position_;
    std::vector<std::size_t> basis_;
    std::vector<S> binv_;
    std::vector<S> xb_;
    std::vector<S> y_;
    std::size_t pivots_since_refactor_ = 0;
};

} // namespace sicrank
