#ifndef SFOREST_LP_HPP
#define SFOREST_LP_HPP

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace sforest {

enum class RowSense { LE, GE, EQ };

enum class LpStatus { Optimal, Infeasible, Unbounded, IterationLimit };

/// All numerical tolerances and limits used by the simplex code live here
/// so that callers share one set of knobs.
struct LpConfig {
    double pivot_tol = 1e-9;        // smallest usable pivot element
    double feasibility_tol = 1e-7;  // bound / row violation accepted as feasible
    double violation_tol = 1e-6;    // cut violation threshold used by separators
    int max_iterations = 2000000;
    int refactor_interval = 64;     // eta updates between basis refactorizations
    int bland_trigger = 50;         // degenerate pivots before switching to Bland's rule
    double time_limit_s = 0.0;      // wall-clock cap per solve; 0 means none
};

/// A linear program in "min c x, rows vs rhs, l <= x <= u" form. Columns
/// and rows can only be appended, which is what the cutting-plane loop
/// relies on for warm restarts.
class LpProgram {
  public:
    struct Column {
        double cost;
        double lower;
        double upper;
        std::string name;
    };
    struct Row {
        RowSense sense;
        double rhs;
        std::vector<std::pair<int, double>> coeffs;  // sorted by column, merged
        std::string name;
    };

    int add_column(double cost, double lower, double upper, std::string name = {});
    int add_row(RowSense sense, double rhs, std::vector<std::pair<int, double>> coeffs,
                std::string name = {});
    void set_bounds(int col, double lower, double upper);

    int column_count() const { return static_cast<int>(cols_.size()); }
    int row_count() const { return static_cast<int>(rows_.size()); }
    const Column& column(int j) const { return cols_[static_cast<std::size_t>(j)]; }
    const Row& row(int i) const { return rows_[static_cast<std::size_t>(i)]; }

  private:
    std::vector<Column> cols_;
    std::vector<Row> rows_;
};

struct LpSolution {
    LpStatus status = LpStatus::IterationLimit;
    double objective = 0.0;
    std::vector<double> x;  // one value per column; empty when infeasible
    int iterations = 0;
};

/// Revised simplex over bounded variables. solve() starts from scratch;
/// resolve() warm-starts from the previous optimal basis and requires the
/// program to be the previously solved one with extra rows appended.
class SimplexSolver {
  public:
    explicit SimplexSolver(LpConfig config = {});
    ~SimplexSolver();
    SimplexSolver(SimplexSolver&&) noexcept;
    SimplexSolver& operator=(SimplexSolver&&) noexcept;

    LpSolution solve(const LpProgram& prog);
    LpSolution resolve(const LpProgram& prog);

    const LpConfig& config() const { return config_; }
    void set_time_limit(double seconds) { config_.time_limit_s = seconds; }

  private:
    struct WarmState;
    LpSolution run(const LpProgram& prog, bool warm);

    LpConfig config_;
    std::unique_ptr<WarmState> warm_;
};

/// One-shot convenience wrapper.
LpSolution solve_lp(const LpProgram& prog, const LpConfig& config = {});

/// Plain-text rendering (objective, rows, bounds) for offline inspection.
std::string export_lp(const LpProgram& prog);

}  // namespace sforest

#endif
