#include "omdet/vector_config.hpp"

#include <algorithm>
#include <functional>

namespace omdet {

namespace {

long long checked_ll(__int128 v, const char* what) {
  if (v > INT64_MAX || v < INT64_MIN)
    throw OmdetError(Err::BadParameters, std::string("overflow in ") + what);
  return static_cast<long long>(v);
}

}  // namespace

Rat::Rat(long long n, long long d) : num(n), den(d) {
  if (den == 0) throw OmdetError(Err::BadParameters, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

Rat Rat::operator+(const Rat& o) const {
  __int128 n = static_cast<__int128>(num) * o.den + static_cast<__int128>(o.num) * den;
  __int128 d = static_cast<__int128>(den) * o.den;
  __int128 g = 1;
  {
    __int128 a = n < 0 ? -n : n, b = d;
    while (b) { __int128 t = a % b; a = b; b = t; }
    g = a ? a : 1;
  }
  return Rat(checked_ll(n / g, "add"), checked_ll(d / g, "add"));
}

Rat Rat::operator-(const Rat& o) const { return *this + Rat(-o.num, o.den); }

Rat Rat::operator*(const Rat& o) const {
  Rat x(num, o.den), y(o.num, den);  // cross-reduce first
  __int128 n = static_cast<__int128>(x.num) * y.num;
  __int128 d = static_cast<__int128>(x.den) * y.den;
  return Rat(checked_ll(n, "mul"), checked_ll(d, "mul"));
}

Rat Rat::operator/(const Rat& o) const {
  if (o.num == 0) throw OmdetError(Err::BadParameters, "division by zero");
  return *this * Rat(o.den, o.num);
}

std::string Rat::str() const {
  return den == 1 ? std::to_string(num)
                  : std::to_string(num) + "/" + std::to_string(den);
}

Rat VectorConfig::det(const std::vector<int>& cols) const {
  const int d = dim;
  if (static_cast<int>(cols.size()) != d)
    throw OmdetError(Err::BadParameters, "det needs dim columns");
  // Gaussian elimination with exact rationals; d <= 4 in practice.
  std::vector<std::vector<Rat>> mat(d, std::vector<Rat>(d));
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < d; ++i) mat[i][j] = vectors[cols[j]][i];
  Rat result(1);
  for (int col = 0; col < d; ++col) {
    int pivot = -1;
    for (int row = col; row < d; ++row)
      if (mat[row][col].sgn() != 0) {
        pivot = row;
        break;
      }
    if (pivot == -1) return Rat(0);
    if (pivot != col) {
      std::swap(mat[pivot], mat[col]);
      result = -result;
    }
    result = result * mat[col][col];
    for (int row = col + 1; row < d; ++row) {
      if (mat[row][col].sgn() == 0) continue;
      Rat factor = mat[row][col] / mat[col][col];
      for (int j = col; j < d; ++j)
        mat[row][j] = mat[row][j] - factor * mat[col][j];
    }
  }
  return result;
}

std::pair<Chirotope, OrientedMatroid> chirotope_from_vectors(
    const VectorConfig& config) {
  const int n = config.size();
  const int r = config.dim;
  if (n < r) throw OmdetError(Err::BadParameters, "fewer vectors than rank");

  std::vector<ElementSet> bases_list;
  std::vector<int8_t> signs;
  std::vector<int> idx(r);
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == r) {
      Rat d = config.det(idx);
      if (d.sgn() == 0)
        throw OmdetError(Err::DegenerateConfiguration,
                         "zero minor on columns " + ElementSet::of(n, idx).str());
      bases_list.push_back(ElementSet::of(n, idx));
      signs.push_back(static_cast<int8_t>(d.sgn()));
      return;
    }
    for (int e = start; e <= n - (r - depth); ++e) {
      idx[depth] = e;
      rec(e + 1, depth + 1);
    }
  };
  rec(0, 0);
  Chirotope chi(n, r, std::move(bases_list), std::move(signs));

  // Signed circuits from the dependencies of each (r+1)-subset via Cramer
  // coefficients; identical to circuits_from_uniform_chirotope on chi.
  auto circuits = circuits_from_uniform_chirotope(chi);
  Matroid m = uniform(r, n);
  std::string why;
  if (!signed_elimination_holds(m, circuits, &why))
    throw OmdetError(Err::DegenerateConfiguration,
                     "vector circuits fail elimination: " + why);
  OrientedMatroid om =
      OrientedMatroid::unchecked(std::make_shared<Matroid>(m), std::move(circuits));
  return {std::move(chi), std::move(om)};
}

VectorConfig lift_lines(const std::vector<AffineLine>& lines) {
  VectorConfig cfg;
  cfg.dim = 3;
  for (const auto& l : lines) cfg.vectors.push_back({l.a1, l.a2, -l.b});
  return cfg;
}

}  // namespace omdet
