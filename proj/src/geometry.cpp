#include "equiform/geometry.hpp"

#include <cmath>

namespace equiform {

MetricField first_fundamental_form(const SurfaceChart& chart) {
  TangentFields tangents = tangent_fields(chart);
  TPoly g11, g12, g22;
  for (int a = 0; a < 7; ++a) {
    g11 += tangents.x_t[a] * tangents.x_t[a];
    g12 += tangents.x_t[a] * tangents.x_phi[a];
    g22 += tangents.x_phi[a] * tangents.x_phi[a];
  }
  return make_metric(std::move(g11), std::move(g12), std::move(g22));
}

MetricField make_metric(TPoly g11, TPoly g12, TPoly g22) {
  MetricField metric;
  metric.det = g11 * g22 - g12 * g12;
  metric.g11 = std::move(g11);
  metric.g12 = std::move(g12);
  metric.g22 = std::move(g22);
  return metric;
}

namespace {

// g[i][j] and adj[l][m] with indices 0 = t, 1 = phi. adj is the 2x2
// adjugate, so g^{lm} = adj[l][m] / det.
struct MetricTable {
  const TPoly* g[2][2];
  TPoly adj[2][2];
  TPoly dg[2][2][2];  // dg[k][i][j] = d g_ij / d x_k
};

MetricTable tabulate(const MetricField& metric) {
  MetricTable table;
  table.g[0][0] = &metric.g11;
  table.g[0][1] = &metric.g12;
  table.g[1][0] = &metric.g12;
  table.g[1][1] = &metric.g22;
  table.adj[0][0] = metric.g22;
  table.adj[1][1] = metric.g11;
  table.adj[0][1] = -metric.g12;
  table.adj[1][0] = table.adj[0][1];
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      table.dg[0][i][j] = table.g[i][j]->diff_t();
      table.dg[1][i][j] = table.g[i][j]->diff_phi();
    }
  }
  return table;
}

}  // namespace

ChristoffelField christoffel(const MetricField& metric) {
  if (metric.det.is_zero()) {
    throw SingularMetric("metric determinant is identically zero");
  }
  MetricTable table = tabulate(metric);
  TPoly den = metric.det.scaled(2);

  ChristoffelField field;
  for (int l = 0; l < 2; ++l) {
    for (int i = 0; i < 2; ++i) {
      for (int j = i; j < 2; ++j) {
        TPoly num;
        for (int m = 0; m < 2; ++m) {
          num += table.adj[l][m] *
                 (table.dg[j][i][m] + table.dg[i][j][m] - table.dg[m][i][j]);
        }
        field.gamma[l][i][j] = RationalExpr(num, den);
        field.gamma[l][j][i] = field.gamma[l][i][j];
      }
    }
  }
  return field;
}

CurvatureField scalar_curvature(const MetricField& metric,
                                const ChristoffelField& gamma) {
  if (metric.det.is_zero()) {
    throw SingularMetric("metric determinant is identically zero");
  }
  MetricTable table = tabulate(metric);

  // All Christoffels share the denominator D = 2 det; keep only their
  // numerators N[l][i][j] and assemble the Ricci contraction over the
  // common denominator D^2, so K ends up over det * D^2 = 4 det^3.
  const TPoly den = metric.det.scaled(2);
  TPoly n[2][2][2];
  TPoly dn[2][2][2][2];  // dn[k][l][i][j] = d N[l][i][j] / d x_k
  for (int l = 0; l < 2; ++l) {
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        n[l][i][j] = gamma.gamma[l][i][j].num();
        dn[0][l][i][j] = n[l][i][j].diff_t();
        dn[1][l][i][j] = n[l][i][j].diff_phi();
      }
    }
  }
  const TPoly dden[2] = {den.diff_t(), den.diff_phi()};

  TPoly k_num;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      // Numerator of R_ij over D^2.
      TPoly bracket;
      for (int l = 0; l < 2; ++l) {
        bracket += dn[l][l][i][j] * den - n[l][i][j] * dden[l];
        bracket -= dn[j][l][i][l] * den - n[l][i][l] * dden[j];
        for (int m = 0; m < 2; ++m) {
          bracket += n[l][i][j] * n[m][l][m];
          bracket -= n[m][i][l] * n[l][j][m];
        }
      }
      k_num += table.adj[i][j] * bracket;
    }
  }

  CurvatureField field;
  TPoly k_den = (metric.det * metric.det * metric.det).scaled(4);
  field.k0_num = k_num.at_t0();
  field.k0_den = k_den.at_t0();
  field.coeff_num = field.k0_num.extract_coeffs();
  field.coeff_den = field.k0_den.extract_coeffs();
  field.k = RationalExpr(std::move(k_num), std::move(k_den));
  return field;
}

double curvature_at(const CurvatureField& field, const MetricField& metric,
                    double t, double phi) {
  double det = metric.det.eval(t, phi);
  if (std::fabs(det) < 1e-12) {
    throw SingularPoint("metric is singular at the requested point");
  }
  return field.k.eval(t, phi);
}

double curvature_at(const MotionParams& params, double t, double phi) {
  MetricField metric = first_fundamental_form(build_chart(params));
  double det = metric.det.eval(t, phi);
  if (std::fabs(det) < 1e-12) {
    throw SingularPoint("metric is singular at the requested point");
  }
  CurvatureField field = scalar_curvature(metric, christoffel(metric));
  return field.k.eval(t, phi);
}

}  // namespace equiform
