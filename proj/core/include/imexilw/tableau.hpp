#pragma once

#include <Eigen/Dense>
#include <string>

namespace imexilw {

// Double Butcher tableau. Stage indices are 0-based here; stage i in the
// usual 1-based notation is row i-1.
struct IMEXTableau {
  std::string name;
  int s = 0;
  Eigen::MatrixXd a_tilde;
  Eigen::MatrixXd a;
  Eigen::VectorXd w_tilde;
  Eigen::VectorXd w;
  Eigen::VectorXd c_tilde;
  Eigen::VectorXd c;

  bool explicit_column_used(int j) const;
  bool implicit_column_used(int j) const;
  // Weights equal the last rows of both tableaux, so U^{n+1} is the last stage.
  bool stiffly_accurate() const;
};

IMEXTableau validate(IMEXTableau t);

// Builds a tableau from coefficients and weights, filling abscissae from row sums.
IMEXTableau make_tableau(std::string name, const Eigen::MatrixXd& a_tilde, const Eigen::MatrixXd& a,
                         const Eigen::VectorXd& w_tilde, const Eigen::VectorXd& w);

IMEXTableau ars_443();

// Explicit SSP-RK3 in Butcher form. The implicit part is zero, so sources are ignored.
IMEXTableau ssp_rk3();

IMEXTableau tableau_by_name(const std::string& name);

}  // namespace imexilw
