#include "imexilw/tableau.hpp"

#include <cmath>
#include <sstream>

#include "imexilw/error.hpp"

namespace imexilw {

namespace {

constexpr double kAbscissaTolerance = 1e-14;

}  // namespace

bool IMEXTableau::explicit_column_used(int j) const {
  if (w_tilde(j) != 0.0) return true;
  for (int i = j + 1; i < s; ++i) {
    if (a_tilde(i, j) != 0.0) return true;
  }
  return false;
}

bool IMEXTableau::implicit_column_used(int j) const {
  if (w(j) != 0.0) return true;
  for (int i = j + 1; i < s; ++i) {
    if (a(i, j) != 0.0) return true;
  }
  return false;
}

bool IMEXTableau::stiffly_accurate() const {
  if (s == 0) return false;
  for (int j = 0; j < s; ++j) {
    if (w_tilde(j) != a_tilde(s - 1, j) || w(j) != a(s - 1, j)) return false;
  }
  return true;
}

IMEXTableau validate(IMEXTableau t) {
  if (t.s < 1) throw Error(ErrorCode::InvalidTableau, "stage count must be positive");
  const auto s = static_cast<Eigen::Index>(t.s);
  if (t.a_tilde.rows() != s || t.a_tilde.cols() != s || t.a.rows() != s || t.a.cols() != s ||
      t.w_tilde.size() != s || t.w.size() != s || t.c_tilde.size() != s || t.c.size() != s) {
    throw Error(ErrorCode::InvalidTableau, "tableau arrays are not sized consistently with s");
  }
  for (int i = 0; i < t.s; ++i) {
    for (int j = 0; j < t.s; ++j) {
      if (j >= i && t.a_tilde(i, j) != 0.0) {
        std::ostringstream msg;
        msg << "explicit coefficient (" << i + 1 << "," << j + 1 << ") must vanish";
        throw Error(ErrorCode::TriangularityViolation, msg.str());
      }
      if (j > i && t.a(i, j) != 0.0) {
        std::ostringstream msg;
        msg << "implicit coefficient (" << i + 1 << "," << j + 1 << ") must vanish";
        throw Error(ErrorCode::TriangularityViolation, msg.str());
      }
    }
  }
  for (int i = 0; i < t.s; ++i) {
    if (std::abs(t.a_tilde.row(i).sum() - t.c_tilde(i)) > kAbscissaTolerance ||
        std::abs(t.a.row(i).sum() - t.c(i)) > kAbscissaTolerance) {
      std::ostringstream msg;
      msg << "abscissa of stage " << i + 1 << " differs from the row sum";
      throw Error(ErrorCode::AbscissaMismatch, msg.str());
    }
  }
  return t;
}

IMEXTableau make_tableau(std::string name, const Eigen::MatrixXd& a_tilde, const Eigen::MatrixXd& a,
                         const Eigen::VectorXd& w_tilde, const Eigen::VectorXd& w) {
  IMEXTableau t;
  t.name = std::move(name);
  t.s = static_cast<int>(a_tilde.rows());
  t.a_tilde = a_tilde;
  t.a = a;
  t.w_tilde = w_tilde;
  t.w = w;
  if (a_tilde.cols() == a_tilde.rows()) t.c_tilde = a_tilde.rowwise().sum();
  if (a.rows() == a.cols()) t.c = a.rowwise().sum();
  return validate(std::move(t));
}

IMEXTableau ars_443() {
  Eigen::MatrixXd at = Eigen::MatrixXd::Zero(5, 5);
  at(1, 0) = 1.0 / 2.0;
  at(2, 0) = 11.0 / 18.0;
  at(2, 1) = 1.0 / 18.0;
  at(3, 0) = 5.0 / 6.0;
  at(3, 1) = -5.0 / 6.0;
  at(3, 2) = 1.0 / 2.0;
  at(4, 0) = 1.0 / 4.0;
  at(4, 1) = 7.0 / 4.0;
  at(4, 2) = 3.0 / 4.0;
  at(4, 3) = -7.0 / 4.0;

  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(5, 5);
  a(1, 1) = 1.0 / 2.0;
  a(2, 1) = 1.0 / 6.0;
  a(2, 2) = 1.0 / 2.0;
  a(3, 1) = -1.0 / 2.0;
  a(3, 2) = 1.0 / 2.0;
  a(3, 3) = 1.0 / 2.0;
  a(4, 1) = 3.0 / 2.0;
  a(4, 2) = -3.0 / 2.0;
  a(4, 3) = 1.0 / 2.0;
  a(4, 4) = 1.0 / 2.0;

  Eigen::VectorXd wt(5);
  wt << 1.0 / 4.0, 7.0 / 4.0, 3.0 / 4.0, -7.0 / 4.0, 0.0;
  Eigen::VectorXd w(5);
  w << 0.0, 3.0 / 2.0, -3.0 / 2.0, 1.0 / 2.0, 1.0 / 2.0;

  IMEXTableau t;
  t.name = "ars443";
  t.s = 5;
  t.a_tilde = at;
  t.a = a;
  t.w_tilde = wt;
  t.w = w;
  t.c_tilde.resize(5);
  t.c_tilde << 0.0, 1.0 / 2.0, 2.0 / 3.0, 1.0 / 2.0, 1.0;
  t.c = t.c_tilde;
  return validate(std::move(t));
}

IMEXTableau ssp_rk3() {
  Eigen::MatrixXd at = Eigen::MatrixXd::Zero(3, 3);
  at(1, 0) = 1.0;
  at(2, 0) = 1.0 / 4.0;
  at(2, 1) = 1.0 / 4.0;
  Eigen::VectorXd wt(3);
  wt << 1.0 / 6.0, 1.0 / 6.0, 2.0 / 3.0;

  IMEXTableau t;
  t.name = "ssprk3";
  t.s = 3;
  t.a_tilde = at;
  t.a = Eigen::MatrixXd::Zero(3, 3);
  t.w_tilde = wt;
  t.w = Eigen::VectorXd::Zero(3);
  t.c_tilde.resize(3);
  t.c_tilde << 0.0, 1.0, 1.0 / 2.0;
  t.c = Eigen::VectorXd::Zero(3);
  return validate(std::move(t));
}

IMEXTableau tableau_by_name(const std::string& name) {
  if (name == "ars443") return ars_443();
  if (name == "ssprk3") return ssp_rk3();
  throw Error(ErrorCode::ConfigError, "unknown tableau '" + name + "'");
}

}  // namespace imexilw
