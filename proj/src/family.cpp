#include "busemann/family.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "busemann/errors.hpp"

namespace busemann {

namespace {

std::int64_t parse_int(std::string_view s, const std::string& whole) {
  std::int64_t v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (s.empty() || ec != std::errc() || ptr != end) throw DomainError("malformed fraction '" + whole + "'");
  return v;
}

}  // namespace

Fraction parse_fraction(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Fraction(parse_int(text, text));
  const std::int64_t num = parse_int(std::string_view(text).substr(0, slash), text);
  const std::int64_t den = parse_int(std::string_view(text).substr(slash + 1), text);
  if (den == 0) throw DomainError("fraction with zero denominator '" + text + "'");
  return Fraction(num, den);
}

std::string format_fraction(const Fraction& f) {
  if (f.denominator() == 1) return std::to_string(f.numerator());
  return std::to_string(f.numerator()) + "/" + std::to_string(f.denominator());
}

FiniteFamily::FiniteFamily(std::vector<Point> points) : points_(std::move(points)) {
  if (points_.empty()) throw DomainError("family must be nonempty");
}

FiniteFamily replicate(const FiniteFamily& family, int k) {
  if (k < 1) throw DomainError("replication count must be >= 1");
  std::vector<Point> out;
  out.reserve(family.size() * static_cast<std::size_t>(k));
  for (int b = 0; b < k; ++b) out.insert(out.end(), family.points().begin(), family.points().end());
  return FiniteFamily(std::move(out));
}

int Multiset::total() const { return std::accumulate(counts.begin(), counts.end(), 0); }

Multiset canonical_multiset(std::vector<Point> atoms, std::vector<int> counts) {
  std::vector<std::size_t> order(atoms.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return atoms[a] < atoms[b]; });
  Multiset m;
  for (std::size_t i : order) {
    if (counts[i] <= 0) continue;
    if (!m.atoms.empty() && m.atoms.back() == atoms[i]) {
      m.counts.back() += counts[i];
    } else {
      m.atoms.push_back(std::move(atoms[i]));
      m.counts.push_back(counts[i]);
    }
  }
  return m;
}

Multiset to_multiset(const FiniteFamily& family) {
  return canonical_multiset(family.points(), std::vector<int>(family.size(), 1));
}

RationalMeasure::RationalMeasure(std::vector<Atom> atoms) {
  if (atoms.empty()) throw DomainError("measure needs at least one atom");
  std::stable_sort(atoms.begin(), atoms.end(), [](const Atom& a, const Atom& b) { return a.point < b.point; });
  Fraction sum(0);
  for (auto& a : atoms) {
    if (a.weight <= Fraction(0)) throw DomainError("measure weights must be positive");
    sum += a.weight;
    if (!atoms_.empty() && atoms_.back().point == a.point)
      atoms_.back().weight += a.weight;
    else
      atoms_.push_back(std::move(a));
  }
  if (sum != Fraction(1)) throw DomainError("measure weights sum to " + format_fraction(sum) + ", not 1");
}

RationalMeasure RationalMeasure::dirac(Point p) { return RationalMeasure({{std::move(p), Fraction(1)}}); }

RationalMeasure RationalMeasure::uniform(const FiniteFamily& family) {
  std::vector<Atom> atoms;
  const Fraction w(1, static_cast<std::int64_t>(family.size()));
  for (const Point& p : family.points()) atoms.push_back({p, w});
  return RationalMeasure(std::move(atoms));
}

std::int64_t RationalMeasure::common_denominator() const {
  std::int64_t l = 1;
  for (const auto& a : atoms_) l = std::lcm(l, a.weight.denominator());
  return l;
}

Multiset RationalMeasure::expand(std::int64_t n) const {
  if (n < 1 || n % common_denominator() != 0)
    throw DomainError("expansion size must be a positive multiple of the common denominator");
  Multiset m;
  for (const auto& a : atoms_) {
    m.atoms.push_back(a.point);
    m.counts.push_back(static_cast<int>(a.weight.numerator() * (n / a.weight.denominator())));
  }
  return m;
}

FiniteFamily RationalMeasure::expand_family(std::int64_t n) const {
  const Multiset m = expand(n);
  std::vector<Point> pts;
  for (std::size_t i = 0; i < m.atoms.size(); ++i) pts.insert(pts.end(), static_cast<std::size_t>(m.counts[i]), m.atoms[i]);
  return FiniteFamily(std::move(pts));
}

void RationalMeasure::validate(const GeodesicSpace& space) const {
  for (const auto& a : atoms_) space.validate(a.point);
}

}  // namespace busemann
