#include "udg/lp.hpp"

#include <stdexcept>

namespace udg {

namespace {

/// Tableau simplex core. Columns: structural | slacks (LE rows) | artificials.
/// Artificial columns stay in the tableau through phase 2 (cost 0, barred
/// from entering) so row duals can be read off their reduced costs.
class Tableau {
public:
    Tableau(const std::vector<std::vector<Rat>>& a, const std::vector<RowType>& types,
            const std::vector<Rat>& b, const std::vector<Rat>& c)
        : m_(a.size()), n_(c.size()), types_(types) {
        for (std::size_t i = 0; i < m_; ++i)
            if (b[i] < 0) throw std::invalid_argument("simplex_min requires b >= 0");

        num_slack_ = 0;
        std::size_t num_eq = 0;
        for (auto t : types) (t == RowType::LessEq ? num_slack_ : num_eq) += 1;
        cols_ = n_ + num_slack_ + num_eq;  // artificials only for equality rows

        rows_.assign(m_, std::vector<Rat>(cols_ + 1, Rat(0)));
        basis_.assign(m_, 0);
        slack_col_.assign(m_, SIZE_MAX);
        art_col_.assign(m_, SIZE_MAX);

        std::size_t next_slack = n_;
        std::size_t next_art = n_ + num_slack_;
        for (std::size_t i = 0; i < m_; ++i) {
            for (std::size_t j = 0; j < n_; ++j) rows_[i][j] = a[i][j];
            rows_[i][cols_] = b[i];
            if (types[i] == RowType::LessEq) {
                slack_col_[i] = next_slack++;
                rows_[i][slack_col_[i]] = 1;
                basis_[i] = slack_col_[i];
            } else {
                art_col_[i] = next_art++;
                rows_[i][art_col_[i]] = 1;
                basis_[i] = art_col_[i];
                artificial_basic_ = true;
            }
        }
    }

    SimplexResult solve(const std::vector<Rat>& c) {
        if (artificial_basic_) {
            // Phase 1: minimize the sum of artificials.
            std::vector<Rat> phase1_cost(cols_, Rat(0));
            for (std::size_t i = 0; i < m_; ++i)
                if (types_[i] == RowType::Eq) phase1_cost[art_col_[i]] = 1;
            run(phase1_cost, /*allow_artificial=*/true);
            if (objective_value(phase1_cost) != 0) throw std::runtime_error("simplex: infeasible");
            drive_artificials_out();
        }

        std::vector<Rat> cost(cols_, Rat(0));
        for (std::size_t j = 0; j < n_; ++j) cost[j] = c[j];
        run(cost, /*allow_artificial=*/false);

        SimplexResult result;
        result.x.assign(n_, Rat(0));
        for (std::size_t i = 0; i < m_; ++i)
            if (basis_[i] < n_) result.x[basis_[i]] = rows_[i][cols_];
        result.objective = objective_value(cost);

        // Row dual y_i = -reduced_cost(unit column of row i).
        const auto reduced = reduced_costs(cost);
        result.dual.resize(m_);
        for (std::size_t i = 0; i < m_; ++i) {
            const std::size_t unit = types_[i] == RowType::LessEq ? slack_col_[i] : art_col_[i];
            result.dual[i] = -reduced[unit];
        }
        return result;
    }

private:
    std::vector<Rat> reduced_costs(const std::vector<Rat>& cost) const {
        std::vector<Rat> r(cost.begin(), cost.end());
        for (std::size_t i = 0; i < m_; ++i) {
            const Rat& cb = cost[basis_[i]];
            if (cb == 0) continue;
            for (std::size_t j = 0; j < cols_; ++j)
                if (rows_[i][j] != 0) r[j] -= cb * rows_[i][j];
        }
        return r;
    }

    Rat objective_value(const std::vector<Rat>& cost) const {
        Rat z(0);
        for (std::size_t i = 0; i < m_; ++i)
            if (cost[basis_[i]] != 0) z += cost[basis_[i]] * rows_[i][cols_];
        return z;
    }

    void pivot(std::size_t row, std::size_t col) {
        const Rat inv = Rat(1) / rows_[row][col];
        for (auto& v : rows_[row]) v *= inv;
        for (std::size_t i = 0; i < m_; ++i) {
            if (i == row || rows_[i][col] == 0) continue;
            const Rat f = rows_[i][col];
            for (std::size_t j = 0; j <= cols_; ++j)
                if (rows_[row][j] != 0) rows_[i][j] -= f * rows_[row][j];
        }
        basis_[row] = col;
    }

    void run(const std::vector<Rat>& cost, bool allow_artificial) {
        // Dantzig pricing (most negative reduced cost) for speed; after a long
        // stretch of degenerate pivots, switch permanently to Bland's rule,
        // which cannot cycle, so termination stays guaranteed.
        bool bland = false;
        std::size_t stalled = 0;
        const std::size_t stall_limit = 4 * (m_ + cols_);
        Rat last_objective = objective_value(cost);
        for (;;) {
            const auto r = reduced_costs(cost);
            std::size_t enter = cols_;
            for (std::size_t j = 0; j < cols_; ++j) {
                if (!allow_artificial && is_artificial(j)) continue;
                if (r[j] >= 0) continue;
                if (enter == cols_ || (!bland && r[j] < r[enter])) enter = j;
                if (bland) break;  // lowest index suffices
            }
            if (enter == cols_) return;
            // Lowest basis index on ratio ties.
            std::size_t leave = m_;
            Rat best_ratio(0);
            for (std::size_t i = 0; i < m_; ++i) {
                if (rows_[i][enter] <= 0) continue;
                Rat ratio = rows_[i][cols_] / rows_[i][enter];
                if (leave == m_ || ratio < best_ratio ||
                    (ratio == best_ratio && basis_[i] < basis_[leave])) {
                    leave = i;
                    best_ratio = ratio;
                }
            }
            if (leave == m_) throw std::runtime_error("simplex: unbounded");
            pivot(leave, enter);

            if (!bland) {
                const Rat z = objective_value(cost);
                if (z == last_objective) {
                    if (++stalled >= stall_limit) bland = true;
                } else {
                    stalled = 0;
                    last_objective = z;
                }
            }
        }
    }

    void drive_artificials_out() {
        for (std::size_t i = 0; i < m_; ++i) {
            if (!is_artificial(basis_[i])) continue;
            // Basic artificial at value 0: pivot any usable column in, or the
            // row is redundant and can stay (its artificial remains 0).
            for (std::size_t j = 0; j < n_ + num_slack_; ++j) {
                if (rows_[i][j] != 0) {
                    pivot(i, j);
                    break;
                }
            }
        }
    }

    bool is_artificial(std::size_t col) const { return col >= n_ + num_slack_; }

    std::size_t m_, n_, num_slack_ = 0, cols_ = 0;
    std::vector<RowType> types_;
    std::vector<std::vector<Rat>> rows_;
    std::vector<std::size_t> basis_;
    std::vector<std::size_t> slack_col_, art_col_;
    bool artificial_basic_ = false;
};

void certify(const std::vector<std::vector<Rat>>& a, const std::vector<RowType>& types,
             const std::vector<Rat>& b, const std::vector<Rat>& c, const SimplexResult& res) {
    const std::size_t m = a.size(), n = c.size();
    // Primal feasibility.
    for (std::size_t j = 0; j < n; ++j)
        if (res.x[j] < 0) throw std::logic_error("simplex certificate: negative variable");
    for (std::size_t i = 0; i < m; ++i) {
        Rat lhs(0);
        for (std::size_t j = 0; j < n; ++j) lhs += a[i][j] * res.x[j];
        if (types[i] == RowType::Eq ? lhs != b[i] : lhs > b[i])
            throw std::logic_error("simplex certificate: primal infeasible row");
    }
    // Dual feasibility: Aᵀy ≤ c, y ≤ 0 on ≤-rows.
    for (std::size_t i = 0; i < m; ++i)
        if (types[i] == RowType::LessEq && res.dual[i] > 0)
            throw std::logic_error("simplex certificate: dual sign violated");
    for (std::size_t j = 0; j < n; ++j) {
        Rat col(0);
        for (std::size_t i = 0; i < m; ++i) col += a[i][j] * res.dual[i];
        if (col > c[j]) throw std::logic_error("simplex certificate: dual infeasible column");
    }
    // Strong duality.
    Rat primal(0), dual(0);
    for (std::size_t j = 0; j < n; ++j) primal += c[j] * res.x[j];
    for (std::size_t i = 0; i < m; ++i) dual += b[i] * res.dual[i];
    if (primal != dual || primal != res.objective)
        throw std::logic_error("simplex certificate: duality gap");
}

}  // namespace

SimplexResult simplex_min(const std::vector<std::vector<Rat>>& a, const std::vector<RowType>& types,
                          const std::vector<Rat>& b, const std::vector<Rat>& c) {
    if (a.size() != types.size() || a.size() != b.size())
        throw std::invalid_argument("simplex_min: inconsistent row counts");
    for (const auto& row : a)
        if (row.size() != c.size()) throw std::invalid_argument("simplex_min: inconsistent column counts");
    Tableau t(a, types, b, c);
    SimplexResult res = t.solve(c);
    certify(a, types, b, c, res);
    return res;
}

std::vector<Rat> WeightDist::per_vertex(const OrbitPartition& orbits) const {
    std::vector<Rat> w(orbits.num_vertices());
    for (std::size_t v = 0; v < w.size(); ++v) w[v] = orbit_weight[orbits.orbit_of[v]];
    return w;
}

P1Solution solve_p1(const std::vector<std::vector<std::size_t>>& sets, const OrbitPartition& orbits) {
    const std::size_t p = orbits.num_orbits();
    const std::size_t nv = orbits.num_vertices();
    if (nv == 0) throw std::invalid_argument("solve_p1: empty graph");

    if (sets.empty()) {
        P1Solution s;
        s.weights.orbit_weight.assign(p, Rat(1, static_cast<long>(nv)));
        s.objective = 0;
        return s;
    }

    // The natural formulation has one row per set and grows without bound as
    // the cut loop accumulates sets, so we hand the simplex its LP dual
    // instead: p+1 rows forever, all of type <=, no phase 1 needed, and the
    // optimal (w, M) fall out of the certified dual multipliers.
    //
    // Primal: min M, s.t. sum_j n_ij w_j <= M for all i, sum_j |O_j| w_j = 1,
    // w, M >= 0. Dual (as a min over u_i = -y_i >= 0 and mu = mu+ - mu-):
    //   min mu- - mu+
    //   s.t. |O_j| mu+ - |O_j| mu- - sum_i n_ij u_i <= 0   (row per orbit j)
    //        sum_i u_i <= 1                                (final row)
    // Its certified row multipliers z satisfy z <= 0, sum_j |O_j| (-z_j) = 1
    // and sum_j n_ij (-z_j) <= -objective exactly, i.e. w_j = -z_j and
    // M = -objective solve the primal.
    const std::size_t s_count = sets.size();
    std::vector<std::vector<Rat>> a(p + 1, std::vector<Rat>(s_count + 2, Rat(0)));
    for (std::size_t i = 0; i < s_count; ++i) {
        for (auto v : sets[i]) {
            if (v >= nv) throw std::invalid_argument("solve_p1: set index out of range");
            a[orbits.orbit_of[v]][i] -= 1;
        }
        a[p][i] = 1;
    }
    for (std::size_t j = 0; j < p; ++j) {
        a[j][s_count] = static_cast<long>(orbits.orbit_sizes[j]);
        a[j][s_count + 1] = -static_cast<long>(orbits.orbit_sizes[j]);
    }
    std::vector<RowType> types(p + 1, RowType::LessEq);
    std::vector<Rat> b(p + 1, Rat(0));
    b[p] = 1;
    std::vector<Rat> c(s_count + 2, Rat(0));
    c[s_count] = -1;
    c[s_count + 1] = 1;

    SimplexResult res = simplex_min(a, types, b, c);
    P1Solution s;
    s.weights.orbit_weight.resize(p);
    for (std::size_t j = 0; j < p; ++j) s.weights.orbit_weight[j] = -res.dual[j];
    s.objective = -res.objective;
    return s;
}

P1Solution solve_p1_vertexwise(const std::vector<std::vector<std::size_t>>& sets, std::size_t n_vertices) {
    return solve_p1(sets, singleton_orbits(n_vertices));
}

}  // namespace udg
