#pragma once

// Parameter sweeps that regenerate the witness curves for the dephased cat,
// weighted GHZ and qubit-oscillator examples, plus the CSV they are written as.

#include "fisherwit/tensor_core.hpp"
#include "fisherwit/witness.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace fisherwit {

// Inclusive grid start, start + step, ...; the last point is exactly `stop`.
// Requires start <= stop and step > 0.
std::vector<double> grid_points(double start, double stop, double step);

struct SweepRow {
    double sweep_value = 0.0;
    std::vector<std::pair<std::string, double>> columns;

    double at(const std::string& name) const;  // throws std::out_of_range
};

struct Table {
    std::vector<std::string> headers;
    std::vector<std::vector<double>> rows;
};

Table to_table(const std::string& sweep_name, const std::vector<SweepRow>& rows);

// 12 significant digits, '.' decimal separator.
std::string format_number(double v);

// Comma-delimited, LF line endings, header row first. Non-finite cells throw
// NumericalError.
void write_csv(std::ostream& out, const Table& table);
std::string to_csv(const Table& table);

struct SweepOptions {
    double threshold = kDetectionThreshold;
    std::uint64_t seed = 0;
    int optimizer_starts = 32;
    unsigned jobs = 0;  // 0 = hardware concurrency
};

// Per s: W along (p1 - p2)/sqrt(2), W along (x1 + x2)/sqrt(2) and the
// optimized witness over {x1, p1, x2, p2}.
std::vector<SweepRow> run_fig1(double alpha, const std::vector<double>& s_grid, int cutoff,
                               const SweepOptions& options = {});

// Per q: optimized witness over the spin set, the unit-Bloch constrained
// maximum of F_Q, the shot-noise bound N and the edges of the q-interval
// where no state-independent bound fires.
std::vector<SweepRow> run_fig2(int qubits, const std::vector<double>& q_grid, const SweepOptions& options = {});

// W for the generator sigma_x + x on |phi_n>, with the cross covariance
// Cov(sigma_x, x) and the optimized witness over {sigma_x ; x}.
SweepRow run_hybrid(int n, int cutoff, const SweepOptions& options = {});

// Same columns as run_hybrid for an arbitrary qubit-mode state.
SweepRow evaluate_hybrid(const DensityMatrix& rho, double sweep_value, const SweepOptions& options = {});

// Evaluates f(0..n-1) on up to `jobs` threads; results keep index order and
// the lowest-index exception is rethrown.
template <typename T, typename F>
std::vector<T> parallel_map(std::size_t n, unsigned jobs, F&& f);

}  // namespace fisherwit

#include "fisherwit/detail/parallel_map.hpp"
