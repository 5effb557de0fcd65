#include "qsuper/color.hpp"

namespace qsuper {

int ColorGrading::add_slot(const std::vector<int>& degree, int parity) {
  slots_.push_back({degree, parity});
  rebuild();
  return slot_count() - 1;
}

void ColorGrading::rebuild() {
  const int n = slot_count();
  const int size = cfg_.size();
  table_.assign(static_cast<std::size_t>(n * n), Factor{});
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      const auto& d = slots_[static_cast<std::size_t>(a)].degree;
      const auto& e = slots_[static_cast<std::size_t>(b)].degree;
      long zd = 0, ze = 0;
      for (int l = 0; l < size; ++l) {
        zd += static_cast<long>(cfg_.z(l + 1)) * d[static_cast<std::size_t>(l)];
        ze += static_cast<long>(cfg_.z(l + 1)) * e[static_cast<std::size_t>(l)];
      }
      Factor f;
      f.sign = (parity(a) * parity(b)) % 2 ? -1 : 1;
      for (int l = 1; l < size; ++l)
        f.p[l] = static_cast<int16_t>(zd * e[static_cast<std::size_t>(l)] - ze * d[static_cast<std::size_t>(l)]);
      table_[static_cast<std::size_t>(a * n + b)] = f;
    }
  }
}

ColorGrading::Factor ColorGrading::chi_pow(int a, int b, long e) const {
  const Factor& f = chi(a, b);
  Factor r;
  r.sign = (f.sign < 0 && (e % 2 != 0)) ? -1 : 1;
  for (int l = 0; l < kMaxGenerators; ++l) r.p[l] = static_cast<int16_t>(f.p[l] * e);
  return r;
}

bool ColorGrading::merge(const int* u, const int* v, int* out, Factor& f) const {
  const int n = slot_count();
  long sign_exp = 0;
  std::array<long, kMaxGenerators> acc{};
  for (int a = 0; a < n; ++a) {
    out[a] = u[a] + v[a];
    if (parity(a) == 1 && (out[a] > 1 || out[a] < 0)) return false;
  }
  for (int a = 1; a < n; ++a) {
    if (u[a] == 0) continue;
    for (int b = 0; b < a; ++b) {
      if (v[b] == 0) continue;
      const Factor& c = chi(a, b);
      long e = static_cast<long>(u[a]) * v[b];
      if (c.sign < 0) sign_exp += e;
      for (int l = 0; l < kMaxGenerators; ++l) acc[l] += c.p[l] * e;
    }
  }
  f.sign = (sign_exp % 2 != 0) ? -1 : 1;
  for (int l = 0; l < kMaxGenerators; ++l) f.p[l] = static_cast<int16_t>(acc[l]);
  return true;
}

}  // namespace qsuper
