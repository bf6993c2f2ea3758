#include "lamina/gluing.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace lamina {

TubeCertificate make_tube_certificate(double k) {
  if (k <= 0) throw std::invalid_argument("tube certificate requires K > 0");
  TubeCertificate c;
  c.k = k;
  c.unique_short_lift = true;
  c.collar_width_lb = k / 2;
  c.genus_lb = tube_genus_bound(k).genus;
  return c;
}

ValidationReport validate_gluing(const GluingPresentation& p) {
  ValidationReport r;
  auto circle_ok = [&](const CircleRef& c) {
    return c.piece >= 0 && c.piece < static_cast<int>(p.pieces.size()) &&
           c.circle >= 0 &&
           c.circle < static_cast<int>(p.pieces[c.piece].circles.size());
  };
  std::vector<std::vector<int>> matched(p.pieces.size());
  for (std::size_t i = 0; i < p.pieces.size(); ++i)
    matched[i].assign(p.pieces[i].circles.size(), 0);

  for (int e = 0; e < static_cast<int>(p.gluing.size()); ++e) {
    const auto& g = p.gluing[e];
    if (!circle_ok(g.plus) || !circle_ok(g.minus)) {
      r.add("circle-refs", "glued pair references a missing circle", {e});
      continue;
    }
    const auto& cp = p.pieces[g.plus.piece].circles[g.plus.circle];
    const auto& cm = p.pieces[g.minus.piece].circles[g.minus.circle];
    if (cp.side != +1 || cm.side != -1)
      r.add("sides", "gluing must match a +circle with a -circle", {e});
    if (cp.degree != cm.degree)
      r.add("degrees", "glued circles have different degrees", {e});
    ++matched[g.plus.piece][g.plus.circle];
    ++matched[g.minus.piece][g.minus.circle];
  }
  for (std::size_t i = 0; i < p.pieces.size(); ++i) {
    for (std::size_t c = 0; c < matched[i].size(); ++c) {
      if (matched[i][c] == 0)
        r.add("matched", "circle is not glued",
              {static_cast<int>(i), static_cast<int>(c)});
      else if (matched[i][c] > 1)
        r.add("matched", "circle glued more than once",
              {static_cast<int>(i), static_cast<int>(c)});
    }
    if (p.pieces[i].circles.empty())
      r.add("circles", "piece carries no boundary circle",
            {static_cast<int>(i)});
  }
  for (int d : p.distinguished)
    if (d < 0 || d >= static_cast<int>(p.gluing.size()))
      r.add("distinguished", "distinguished index out of range", {d});
  return r;
}

int presentation_degree(const GluingPresentation& p) {
  int total = 0;
  for (const auto& g : p.gluing)
    total += p.pieces[g.plus.piece].circles[g.plus.circle].degree;
  return total;
}

std::vector<int> curve_spectrum(const GluingPresentation& p) {
  std::vector<int> out;
  for (const auto& g : p.gluing)
    out.push_back(p.pieces[g.plus.piece].circles[g.plus.circle].degree);
  std::sort(out.begin(), out.end());
  return out;
}

GluingPresentation identity_presentation(bool nonseparating) {
  GluingPresentation p;
  GluingPiece piece;
  piece.name = "base";
  piece.connected = true;
  piece.stays_connected_when_cut = nonseparating;
  piece.circles = {{+1, 1, "alpha+"}, {-1, 1, "alpha-"}};
  p.pieces.push_back(std::move(piece));
  p.gluing.push_back({{0, 0}, {0, 1}});
  return p;
}

GluingPresentation tube_presentation(double k) {
  GluingPresentation p;
  GluingPiece piece;
  piece.name = "tube";
  piece.connected = true;
  piece.stays_connected_when_cut = true;  // the short lift is non-separating
  piece.circles = {{+1, 1, "hat_alpha+"}, {-1, 1, "hat_alpha-"}};
  piece.certificate = make_tube_certificate(k);
  p.pieces.push_back(std::move(piece));
  p.gluing.push_back({{0, 0}, {0, 1}});
  return p;
}

GluingPresentation surgery(const GluingPresentation& p1, int e1,
                           const GluingPresentation& p2, int e2) {
  auto check = [](const GluingPresentation& p, int e, const char* which) {
    if (e < 0 || e >= static_cast<int>(p.gluing.size()))
      throw std::invalid_argument(std::string(which) +
                                  ": glued pair index out of range");
    const auto& g = p.gluing[e];
    if (p.pieces[g.plus.piece].circles[g.plus.circle].degree != 1)
      throw std::invalid_argument(std::string(which) +
                                  ": surgery needs a degree-1 glued pair");
  };
  check(p1, e1, "first presentation");
  check(p2, e2, "second presentation");

  GluingPresentation out;
  out.pieces = p1.pieces;
  out.pieces.insert(out.pieces.end(), p2.pieces.begin(), p2.pieces.end());
  int shift = static_cast<int>(p1.pieces.size());
  auto shifted = [&](CircleRef c) {
    return CircleRef{c.piece + shift, c.circle};
  };

  for (int e = 0; e < static_cast<int>(p1.gluing.size()); ++e)
    if (e != e1) out.gluing.push_back(p1.gluing[e]);
  for (int e = 0; e < static_cast<int>(p2.gluing.size()); ++e)
    if (e != e2)
      out.gluing.push_back(
          {shifted(p2.gluing[e].plus), shifted(p2.gluing[e].minus)});

  // crosswise regluing of the selected pairs
  const auto& a = p1.gluing[e1];
  const auto& b = p2.gluing[e2];
  out.distinguished.push_back(static_cast<int>(out.gluing.size()));
  out.gluing.push_back({a.plus, shifted(b.minus)});
  out.distinguished.push_back(static_cast<int>(out.gluing.size()));
  out.gluing.push_back({shifted(b.plus), a.minus});
  return out;
}

GluingPresentation attach_tube(const GluingPresentation& p, int e, double k) {
  return surgery(p, e, tube_presentation(k), 0);
}

std::vector<std::vector<int>> connectivity(const GluingPresentation& p) {
  int n = static_cast<int>(p.pieces.size());
  std::vector<int> comp(n);
  std::iota(comp.begin(), comp.end(), 0);
  auto find = [&](int x) {
    while (comp[x] != x) x = comp[x] = comp[comp[x]];
    return x;
  };
  for (const auto& g : p.gluing) {
    if (g.plus.piece < 0 || g.plus.piece >= n || g.minus.piece < 0 ||
        g.minus.piece >= n)
      continue;
    int a = find(g.plus.piece), b = find(g.minus.piece);
    if (a != b) comp[a] = b;
  }
  std::vector<std::vector<int>> out;
  std::vector<int> slot(n, -1);
  for (int i = 0; i < n; ++i) {
    int r = find(i);
    if (slot[r] < 0) {
      slot[r] = static_cast<int>(out.size());
      out.emplace_back();
    }
    out[slot[r]].push_back(i);
  }
  return out;
}

}  // namespace lamina
