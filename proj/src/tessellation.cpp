#include "coxbound/tessellation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "coxbound/nerve.hpp"

namespace coxbound {
namespace {

// Maps covectors (values on the simple roots) to points of the chosen chart.
class Chart {
 public:
  Chart(const CoxeterSystem& sys, TriangleKind kind) : kind_(kind), form_(cosine_form(sys)) {
    if (kind == TriangleKind::Euclidean) {
      Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(form_);
      null_ = es.eigenvectors().col(0);  // smallest eigenvalue is 0
      if (null_.sum() < 0) null_ = -null_;
      const Eigen::Matrix2d p = form_.topLeftCorner<2, 2>();
      const Eigen::Matrix2d dual = p.inverse();
      lower_ = Eigen::LLT<Eigen::Matrix2d>(dual).matrixL();
    } else {
      form_inv_ = form_.inverse();
      Eigen::SelfAdjointEigenSolver<Eigen::Matrix3d> es(form_);
      const Eigen::Vector3d ev = es.eigenvalues();
      basis_ = es.eigenvectors();
      for (int i = 0; i < 3; ++i) scale_(i) = std::sqrt(std::abs(ev(i)));
      // Hyperbolic: ascending order puts the single negative eigenvalue first.
      time_axis_ = kind == TriangleKind::Hyperbolic ? 0 : 2;
      const Eigen::Vector3d centroid = lift(Eigen::Vector3d::Ones());
      sign_ = centroid(time_axis_) < 0 ? -1.0 : 1.0;
    }
  }

  Point2 operator()(const Eigen::Vector3d& covector, bool* visible = nullptr) const {
    if (visible) *visible = true;
    if (kind_ == TriangleKind::Euclidean) {
      const Eigen::Vector3d c = covector / covector.dot(null_);
      const Eigen::Vector2d xy = lower_.transpose() * c.head<2>();
      return {xy(0), xy(1)};
    }
    const Eigen::Vector3d y = lift(covector);
    const int a = time_axis_ == 0 ? 1 : 0, b = time_axis_ == 2 ? 1 : 2;
    if (kind_ == TriangleKind::Hyperbolic) return {y(a) / y(time_axis_), y(b) / y(time_axis_)};
    const Eigen::Vector3d u = y.normalized() * sign_;
    if (visible) *visible = u(time_axis_) >= -1e-12;
    return {u(a), u(b)};
  }

 private:
  Eigen::Vector3d lift(const Eigen::Vector3d& covector) const {
    const Eigen::Vector3d v = form_inv_ * covector;
    return scale_.cwiseProduct(basis_.transpose() * v);
  }

  TriangleKind kind_;
  Eigen::Matrix3d form_;
  Eigen::Matrix3d form_inv_ = Eigen::Matrix3d::Zero();
  Eigen::Vector3d null_ = Eigen::Vector3d::Zero();
  Eigen::Matrix2d lower_ = Eigen::Matrix2d::Identity();
  Eigen::Matrix3d basis_ = Eigen::Matrix3d::Identity();
  Eigen::Vector3d scale_ = Eigen::Vector3d::Ones();
  int time_axis_ = 0;
  double sign_ = 1.0;
};

TriangleType check_rank3(const CoxeterSystem& sys) {
  if (sys.rank() != 3) throw std::invalid_argument("tessellations need exactly 3 generators");
  for (int s = 0; s < 3; ++s)
    for (int t = s + 1; t < 3; ++t)
      if (sys.order(s, t).is_infinite()) throw std::invalid_argument("tessellations need a complete nerve K3");
  return triangle_type(sys, sys.all());
}

// Dual action: (w.f)(a_j) = f(w^-1 a_j), so a word s1..sk acts by rho(s1)^T ... rho(sk)^T.
Eigen::Matrix3d dual_matrix(const std::vector<Eigen::MatrixXd>& rho, std::span<const Gen> word) {
  Eigen::Matrix3d m = Eigen::Matrix3d::Identity();
  for (Gen g : word) m = m * rho[static_cast<std::size_t>(g)].transpose();
  return m;
}

std::array<Point2, 3> corners_of(const Chart& chart, const Eigen::Matrix3d& m, bool* visible) {
  std::array<Point2, 3> out;
  bool all_visible = true;
  for (int i = 0; i < 3; ++i) {
    bool vis = true;
    out[static_cast<std::size_t>(i)] = chart(m.col(i), &vis);
    all_visible = all_visible && vis;
  }
  if (visible) *visible = all_visible;
  return out;
}

}  // namespace

std::array<Point2, 3> chamber_image(const CoxeterSystem& sys, std::span<const Gen> word) {
  const TriangleType tt = check_rank3(sys);
  const Chart chart(sys, tt.kind);
  return corners_of(chart, dual_matrix(geometric_representation(sys), word), nullptr);
}

Tessellation triangle_orbit(const CoxeterSystem& sys, int depth) {
  const TriangleType tt = check_rank3(sys);
  if (depth < 0) throw std::invalid_argument("depth must be >= 0");
  const Chart chart(sys, tt.kind);
  const auto rho = geometric_representation(sys);
  Tessellation out{tt.kind == TriangleKind::Euclidean    ? TessellationModel::EuclideanPlane
                   : tt.kind == TriangleKind::Hyperbolic ? TessellationModel::KleinDisk
                                                         : TessellationModel::SphereOrthographic,
                   tt, depth, {}};
  const CayleyBall ball = cayley_ball(sys, depth);
  for (const auto& nf : ball.vertices) {
    OrbitTriangle tri{nf, {}, true};
    tri.corners = corners_of(chart, dual_matrix(rho, nf.word), &tri.visible);
    out.triangles.push_back(std::move(tri));
  }
  return out;
}

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", std::abs(v) < 5e-5 ? 0.0 : v);
  return buf;
}

}  // namespace

std::string tessellation_svg(const Tessellation& t) {
  constexpr double kSize = 800.0, kMargin = 20.0;
  double minx = -1, maxx = 1, miny = -1, maxy = 1;
  if (t.model == TessellationModel::EuclideanPlane) {
    minx = miny = std::numeric_limits<double>::max();
    maxx = maxy = std::numeric_limits<double>::lowest();
    for (const auto& tri : t.triangles)
      for (const auto& p : tri.corners) {
        minx = std::min(minx, p.x);
        maxx = std::max(maxx, p.x);
        miny = std::min(miny, p.y);
        maxy = std::max(maxy, p.y);
      }
  }
  const double span = std::max(maxx - minx, maxy - miny);
  const double scale = (kSize - 2 * kMargin) / (span > 0 ? span : 1.0);
  auto px = [&](const Point2& p) {
    return fmt(kMargin + (p.x - minx) * scale) + "," + fmt(kSize - kMargin - (p.y - miny) * scale);
  };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kSize << "\" height=\"" << kSize
     << "\" viewBox=\"0 0 " << kSize << ' ' << kSize << "\">\n"
     << "<title>triangle group (" << t.triangle.labels[0].to_string() << ',' << t.triangle.labels[1].to_string()
     << ',' << t.triangle.labels[2].to_string() << ") " << to_string(t.triangle.kind) << ", depth " << t.depth
     << "</title>\n";
  if (t.model != TessellationModel::EuclideanPlane) {
    os << "<circle cx=\"" << fmt(kSize / 2) << "\" cy=\"" << fmt(kSize / 2) << "\" r=\"" << fmt(kSize / 2 - kMargin)
       << "\" fill=\"none\" stroke=\"#444\" stroke-width=\"1\"/>\n";
  }
  for (const auto& tri : t.triangles) {
    if (!tri.visible) continue;
    const bool even = tri.element.length() % 2 == 0;
    os << "<polygon points=\"" << px(tri.corners[0]) << ' ' << px(tri.corners[1]) << ' ' << px(tri.corners[2])
       << "\" fill=\"" << (even ? "#f2efe6" : "#3b6ea5") << "\" stroke=\"#222\" stroke-width=\"0.5\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::string tessellation_svg(const CoxeterSystem& sys, int depth) {
  return tessellation_svg(triangle_orbit(sys, depth));
}

}  // namespace coxbound
