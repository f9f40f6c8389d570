#include "seriescone/plot.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace seriescone {

namespace {

constexpr int kView = 800;
constexpr int kMargin = 60;

std::vector<RatVec> sample_spec(const SupportSpec& s, int depth) {
  std::set<std::vector<std::pair<Int, Int>>> seen;
  std::vector<RatVec> pts;
  auto push = [&](const RatVec& p) {
    std::vector<std::pair<Int, Int>> k;
    for (const Rat& c : p) k.emplace_back(c.num(), c.den());
    if (seen.insert(k).second) pts.push_back(p);
  };
  for (const RatVec& p : s.points) push(p);
  for (const auto& r : s.rays)
    for (Int k = 0; k <= depth; ++k) push(add(r.base, scaled(r.step, Rat(k))));
  for (const auto& g : s.semigroups) {
    // combinations with small coefficient sum
    std::vector<RatVec> frontier = {g.base};
    push(g.base);
    for (int round = 0; round < depth / 2 + 1; ++round) {
      std::vector<RatVec> next;
      for (const RatVec& p : frontier)
        for (const RatVec& v : g.gens) {
          RatVec q = add(p, v);
          push(q);
          next.push_back(q);
        }
      frontier = std::move(next);
      if (frontier.size() > 64) frontier.resize(64);
    }
  }
  for (const auto& t : s.ptails) {
    Rat pk(t.p);
    for (Int k = 1; k <= depth; ++k) {
      push(add(t.base, scaled(t.dir, Rat(1) - Rat(1) / pk)));
      pk = pk * Rat(t.p);
    }
  }
  std::sort(pts.begin(), pts.end(), [](const RatVec& a, const RatVec& b) { return lex_less(a, b); });
  return pts;
}

struct Frame {
  Rat xmin, xmax, ymin, ymax;
  Int px(const Rat& x) const {
    Rat t = (x - xmin) / (xmax - xmin);
    return (t * Rat(kView - 2 * kMargin)).floor() + kMargin;
  }
  Int py(const Rat& y) const {
    Rat t = (y - ymin) / (ymax - ymin);
    return kView - kMargin - (t * Rat(kView - 2 * kMargin)).floor();
  }
};

PlotData render(const std::vector<RatVec>& pts, const Cone* cone,
                const std::vector<RatVec>& corners) {
  Frame f{Rat(0), Rat(1), Rat(0), Rat(1)};
  bool first = true;
  auto grow = [&](const RatVec& p) {
    if (first) {
      f.xmin = f.xmax = p[0];
      f.ymin = f.ymax = p[1];
      first = false;
    } else {
      f.xmin = min(f.xmin, p[0]);
      f.xmax = max(f.xmax, p[0]);
      f.ymin = min(f.ymin, p[1]);
      f.ymax = max(f.ymax, p[1]);
    }
  };
  for (const RatVec& p : pts) grow(p);
  for (const RatVec& p : corners) grow(p);
  grow({Rat(0), Rat(0)});
  if (f.xmax == f.xmin) f.xmax = f.xmin + Rat(1);
  if (f.ymax == f.ymin) f.ymax = f.ymin + Rat(1);

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kView << "\" height=\"" << kView
      << "\" viewBox=\"0 0 " << kView << " " << kView << "\">\n";
  svg << "<rect width=\"" << kView << "\" height=\"" << kView << "\" fill=\"white\"/>\n";
  if (cone && cone->dim() >= 1) {
    // shade the cone from the origin along its extreme rays
    Rat reach = max(f.xmax - f.xmin, f.ymax - f.ymin) * Rat(3);
    std::vector<std::pair<Int, Int>> poly;
    poly.emplace_back(f.px(Rat(0)), f.py(Rat(0)));
    for (const IntVec& r : cone->generators()) {
      Rat norm = max(abs(Rat(r[0])), abs(Rat(r[1])));
      RatVec tip = {Rat(r[0]) * reach / norm, Rat(r[1]) * reach / norm};
      poly.emplace_back(f.px(tip[0]), f.py(tip[1]));
    }
    svg << "<polygon points=\"";
    for (size_t i = 0; i < poly.size(); ++i) {
      if (i) svg << " ";
      svg << poly[i].first << "," << poly[i].second;
    }
    svg << "\" fill=\"#d8e4f0\" stroke=\"#7890a8\" stroke-width=\"1\"/>\n";
  }
  svg << "<line x1=\"" << f.px(f.xmin) << "\" y1=\"" << f.py(Rat(0)) << "\" x2=\""
      << f.px(f.xmax) << "\" y2=\"" << f.py(Rat(0)) << "\" stroke=\"black\"/>\n";
  svg << "<line x1=\"" << f.px(Rat(0)) << "\" y1=\"" << f.py(f.ymin) << "\" x2=\""
      << f.px(Rat(0)) << "\" y2=\"" << f.py(f.ymax) << "\" stroke=\"black\"/>\n";
  for (const RatVec& p : pts)
    svg << "<circle cx=\"" << f.px(p[0]) << "\" cy=\"" << f.py(p[1])
        << "\" r=\"3\" fill=\"black\"/>\n";
  for (const RatVec& p : corners)
    svg << "<circle cx=\"" << f.px(p[0]) << "\" cy=\"" << f.py(p[1])
        << "\" r=\"5\" fill=\"none\" stroke=\"#c03020\" stroke-width=\"2\"/>\n";
  svg << "</svg>\n";

  std::ostringstream csv;
  csv << "x,y\n";
  for (const RatVec& p : pts) csv << p[0].str() << "," << p[1].str() << "\n";
  for (const RatVec& p : corners) csv << p[0].str() << "," << p[1].str() << ",corner\n";
  return {svg.str(), csv.str()};
}

}  // namespace

PlotData plot_spec(const SupportSpec& s, const std::vector<RatVec>& corners, int family_depth) {
  if (s.n != 2) throw std::invalid_argument("plotting is two dimensional");
  std::vector<RatVec> pts = sample_spec(s, family_depth);
  Cone t = s.empty() ? Cone::zero(2) : dual(tau(s));
  return render(pts, s.empty() ? nullptr : &t, corners);
}

PlotData plot_points(const std::vector<RatVec>& pts) {
  for (const RatVec& p : pts)
    if (p.size() != 2) throw std::invalid_argument("plotting is two dimensional");
  std::vector<RatVec> sorted = pts;
  std::sort(sorted.begin(), sorted.end(),
            [](const RatVec& a, const RatVec& b) { return lex_less(a, b); });
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  return render(sorted, nullptr, {});
}

}  // namespace seriescone
