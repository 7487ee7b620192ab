#pragma once

// Relative-error tables of the truncated expansion against the quadrature
// oracle, with the two published reference layouts (x = 1 and x = -2,
// orders 0..5) as presets.

#include <array>
#include <string>
#include <vector>

#include "pearcey/asymptotics.hpp"
#include "pearcey/oracle.hpp"
#include "pearcey/types.hpp"

namespace pearcey {

struct TableRow {
  std::string label;
  double modulus;
  double arg_over_pi;  // y = modulus * exp(i * pi * arg_over_pi)
  std::array<double, 6> published;  // published relative errors for n = 0..5

  Complex y() const {
    // Exact for real rows so that "--y 10" and "--y-mod 10 --y-arg-pi 0" agree bit for bit.
    return arg_over_pi == 0.0 ? Complex{modulus, 0.0} : std::polar(modulus, kPi * arg_over_pi);
  }
};

struct TableSpec {
  int id;
  Complex x;
  std::vector<TableRow> rows;
  std::vector<int> orders;
};

struct TableCell {
  std::string y_label;
  Complex y;
  int n;
  double rel_error;
  double published;
};

inline TableSpec published_table_1() {
  return {1,
          Complex{1.0, 0.0},
          {
              {"5", 5, 0, {0.222317, 0.101075, 0.0000918203, 0.00372178, 0.000876593, 0.00302324}},
              {"10", 10, 0, {0.0316421, 0.00261898, 0.00112219, 0.000403251, 0.0000783942, 0.0000639694}},
              {"20e^{i*pi/4}", 20, 0.25,
               {0.0292638, 0.00517274, 0.000228056, 0.0000486543, 0.0000154281, 4.73317e-6}},
              {"20e^{-3i*pi/8}", 20, -0.375,
               {0.0296318, 0.00517473, 0.000223576, 0.0000434364, 0.0000166979, 5.11767e-6}},
              {"30", 30, 0, {0.00299077, 0.00224863, 0.0000906066, 8.36063e-6, 2.84074e-6, 5.29933e-7}},
              {"40", 40, 0, {0.0413675, 0.00287761, 0.0000658777, 0.0000213951, 1.41449e-6, 3.58447e-7}},
              {"50", 50, 0, {0.0291708, 0.00152467, 0.0000388369, 0.0000100058, 4.79637e-7, 1.23074e-7}},
          },
          {0, 1, 2, 3, 4, 5}};
}

inline TableSpec published_table_2() {
  return {2,
          Complex{-2.0, 0.0},
          {
              {"5", 5, 0, {0.137947, 0.0410408, 0.0115823, 0.00357474, 0.0159012, 0.00749881}},
              {"10", 10, 0, {0.0443761, 0.0102376, 0.00254929, 0.000330121, 0.00115553, 0.000371235}},
              {"20", 20, 0, {0.0312556, 0.00192754, 0.00045748, 0.000173494, 0.00006291, 0.0000168014}},
              {"30e^{i*pi/4}", 30, 0.25,
               {0.0237833, 0.00108374, 0.000209653, 0.0000599538, 0.0000165985, 3.36842e-6}},
              {"30e^{-3i*pi/8}", 30, -0.375,
               {0.023678, 0.00109324, 0.000206658, 0.0000588055, 0.0000164115, 3.3194e-6}},
              {"40", 40, 0, {0.023888, 0.00075983, 0.000110305, 0.0000383009, 2.30021e-6, 1.02546e-6}},
              {"50", 50, 0, {0.00206123, 0.000599664, 0.0000920699, 6.27624e-7, 3.52299e-6, 5.09017e-7}},
          },
          {0, 1, 2, 3, 4, 5}};
}

inline TableSpec published_table(int id) {
  if (id == 1) return published_table_1();
  if (id == 2) return published_table_2();
  throw DomainError("no table preset with id " + std::to_string(id));
}

inline QuadratureConfig table_oracle_config(Strategy strategy) {
  return strategy == Strategy::RealAxis ? QuadratureConfig::real_axis(50)
                                        : QuadratureConfig::contour();
}

/// Rows in preset order, orders ascending within a row.
inline std::vector<TableCell> compute_table(const TableSpec& spec, Strategy oracle) {
  const QuadratureConfig cfg = table_oracle_config(oracle);
  int max_order = 0;
  for (int n : spec.orders) max_order = std::max(max_order, n);

  std::vector<TableCell> cells;
  for (const TableRow& row : spec.rows) {
    const Complex y = row.y();
    const Complex reference = pearcey_quadrature(spec.x, y, cfg);
    const ExpansionResult approx = pearcey_asymptotic(spec.x, y, max_order);
    for (int n : spec.orders) {
      cells.push_back({row.label, y, n, relative_error(approx.partial_sums[n], reference),
                       row.published[static_cast<std::size_t>(n)]});
    }
  }
  return cells;
}

}  // namespace pearcey
