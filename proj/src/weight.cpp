#include "gsp4/weight.hpp"

#include <ostream>
#include <sstream>

namespace gsp4 {

std::string Weight::str() const {
  std::ostringstream os;
  os << "(" << a << "," << b << ";" << c << ")";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Weight& w) { return os << w.str(); }

Int coroot_pairing(const Weight& w, int i) {
  switch (i) {
    case 0: return w.a - w.b;
    case 1: return w.b;
    default: fail(errc::bad_request, "coroot index must be 0 or 1");
  }
}

std::array<Int, 4> spin_cochar(const Weight& w) {
  return {(w.a + w.b + w.c) / 2, (w.a - w.b + w.c) / 2, (-w.a + w.b + w.c) / 2,
          (-w.a - w.b + w.c) / 2};
}

DominanceFlags flags(const Weight& w, Int p) {
  DominanceFlags f;
  const Int d0 = coroot_pairing(w, 0);
  const Int d1 = coroot_pairing(w, 1);
  f.dominant = w.a >= w.b && w.b >= 0;
  f.p_restricted = 0 <= d0 && d0 < p && 0 <= d1 && d1 < p;
  f.p_regular = 0 <= d0 && d0 < p - 1 && 0 <= d1 && d1 < p - 1;
  f.in_X0 = w.a == 0 && w.b == 0;
  return f;
}

namespace {

constexpr std::array<std::string_view, 8> kWords = {"e",      "s0",     "s1",     "s0s1",
                                                    "s1s0",   "s0s1s0", "s1s0s1", "s0s1s0s1"};
constexpr std::array<int, 8> kLength = {0, 1, 1, 2, 2, 3, 3, 4};

// action on the (a,b) plane, one 2x2 integer matrix per element:
// {m00, m01, m10, m11} acting as (a,b) -> (m00 a + m01 b, m10 a + m11 b)
constexpr std::array<std::array<Int, 4>, 8> kAction = {{
    {1, 0, 0, 1},    // e
    {0, 1, 1, 0},    // s0   (a,b) -> (b,a)
    {1, 0, 0, -1},   // s1   (a,b) -> (a,-b)
    {0, -1, 1, 0},   // s0s1 (a,b) -> (-b,a)
    {0, 1, -1, 0},   // s1s0 (a,b) -> (b,-a)
    {-1, 0, 0, 1},   // s0s1s0
    {0, -1, -1, 0},  // s1s0s1
    {-1, 0, 0, -1},  // w0
}};

std::array<Int, 4> mat_mul(const std::array<Int, 4>& l, const std::array<Int, 4>& r) {
  return {l[0] * r[0] + l[1] * r[2], l[0] * r[1] + l[1] * r[3], l[2] * r[0] + l[3] * r[2],
          l[2] * r[1] + l[3] * r[3]};
}

int index_of_matrix(const std::array<Int, 4>& m) {
  for (int i = 0; i < 8; ++i)
    if (kAction[static_cast<size_t>(i)] == m) return i;
  fail(errc::bad_request, "matrix is not in the Weyl group image");
}

struct Tables {
  std::array<std::array<int, 8>, 8> mult{};
  std::array<int, 8> inv{};

  Tables() {
    for (int i = 0; i < 8; ++i) {
      for (int j = 0; j < 8; ++j)
        mult[static_cast<size_t>(i)][static_cast<size_t>(j)] = index_of_matrix(
            mat_mul(kAction[static_cast<size_t>(i)], kAction[static_cast<size_t>(j)]));
      for (int j = 0; j < 8; ++j)
        if (mult[static_cast<size_t>(i)][static_cast<size_t>(j)] == 0) inv[static_cast<size_t>(i)] = j;
    }
    check();
  }

  void check() const {
    const int s0 = static_cast<int>(WeylElement::s0);
    const int s1 = static_cast<int>(WeylElement::s1);
    auto m = [&](int l, int r) { return mult[static_cast<size_t>(l)][static_cast<size_t>(r)]; };
    if (m(s0, s0) != 0 || m(s1, s1) != 0)
      fail(errc::bad_request, "Weyl generators are not involutions");
    int s0s1 = m(s0, s1);
    if (s0s1 != static_cast<int>(WeylElement::s0s1))
      fail(errc::bad_request, "word table mislabels s0s1");
    int pow = 0;
    for (int k = 0; k < 4; ++k) pow = m(pow, s0s1);
    if (pow != 0) fail(errc::bad_request, "(s0 s1)^4 != e");
    if (m(s0s1, s0s1) != static_cast<int>(WeylElement::w0))
      fail(errc::bad_request, "w0 != (s0 s1)^2");
    // every canonical word reduces to its own index
    for (int i = 0; i < 8; ++i) {
      std::string_view w = kWords[static_cast<size_t>(i)];
      if (w == "e") continue;
      int acc = 0;
      for (size_t pos = 0; pos + 1 < w.size(); pos += 2)
        acc = m(acc, w[pos + 1] == '0' ? s0 : s1);
      if (acc != i) fail(errc::bad_request, "word table inconsistent");
    }
  }
};

const Tables& tables() {
  static const Tables t;
  return t;
}

}  // namespace

std::string_view word(WeylElement w) { return kWords[static_cast<size_t>(w)]; }

std::optional<WeylElement> weyl_from_word(std::string_view word) {
  for (int i = 0; i < 8; ++i)
    if (kWords[static_cast<size_t>(i)] == word) return static_cast<WeylElement>(i);
  if (word == "1" || word.empty()) return WeylElement::e;
  return std::nullopt;
}

WeylElement compose(WeylElement l, WeylElement r) {
  return static_cast<WeylElement>(
      tables().mult[static_cast<size_t>(l)][static_cast<size_t>(r)]);
}

WeylElement inverse(WeylElement w) {
  return static_cast<WeylElement>(tables().inv[static_cast<size_t>(w)]);
}

int weyl_length(WeylElement w) { return kLength[static_cast<size_t>(w)]; }

int weyl_sign(WeylElement w) { return weyl_length(w) % 2 == 0 ? 1 : -1; }

WeylElement iota(WeylElement w) {
  switch (w) {
    case WeylElement::e: return WeylElement::e;
    case WeylElement::s0: return WeylElement::s1;
    case WeylElement::s1: return WeylElement::s0;
    case WeylElement::s0s1: return WeylElement::s1s0;
    case WeylElement::s1s0: return WeylElement::s0s1;
    case WeylElement::s0s1s0: return WeylElement::s1s0s1;
    case WeylElement::s1s0s1: return WeylElement::s0s1s0;
    case WeylElement::w0: return WeylElement::w0;  // s1s0s1s0 = (s0s1)^2
  }
  fail(errc::bad_request, "bad Weyl element");
}

Weight weyl_act(WeylElement w, const Weight& lam) {
  const auto& m = kAction[static_cast<size_t>(w)];
  return Weight(m[0] * lam.a + m[1] * lam.b, m[2] * lam.a + m[3] * lam.b, lam.c);
}

Weight dot_act(WeylElement w, const Weight& lam) {
  return weyl_act(w, lam + rho_tilde()) - rho_tilde();
}

void validate_weyl_presentation() { tables(); }

}  // namespace gsp4
