#include "resovar/arrangement.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include "resovar/errors.hpp"
#include "resovar/rational.hpp"

namespace resovar {

namespace {

using Wide = __int128;

Wide wide_abs(Wide v) { return v < 0 ? -v : v; }

Wide wide_gcd(Wide a, Wide b) {
  a = wide_abs(a);
  b = wide_abs(b);
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

long long narrow(Wide v) {
  if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min()) {
    fail(ErrorCode::BadInput, "coordinate overflow while canonicalizing a triple");
  }
  return static_cast<long long>(v);
}

// primitive, first nonzero entry positive
Triple canonical_triple(Wide a, Wide b, Wide c) {
  Wide g = wide_gcd(wide_gcd(a, b), c);
  if (g != 0) {
    a /= g;
    b /= g;
    c /= g;
  }
  Wide lead = a != 0 ? a : (b != 0 ? b : c);
  if (lead < 0) {
    a = -a;
    b = -b;
    c = -c;
  }
  return Triple{narrow(a), narrow(b), narrow(c)};
}

}  // namespace

ProjectiveLine ProjectiveLine::from_triple(long long a, long long b, long long c) {
  if (a == 0 && b == 0 && c == 0) {
    fail(ErrorCode::ZeroTriple, "a line needs a nonzero coefficient triple");
  }
  return ProjectiveLine{canonical_triple(a, b, c)};
}

ProjectivePoint ProjectivePoint::from_triple(long long x, long long y, long long z) {
  if (x == 0 && y == 0 && z == 0) {
    fail(ErrorCode::BadInput, "a projective point needs nonzero coordinates");
  }
  return ProjectivePoint{canonical_triple(x, y, z)};
}

bool incident(const ProjectivePoint& p, const ProjectiveLine& l) {
  Wide dot = Wide(p.coords[0]) * l.coeffs[0] + Wide(p.coords[1]) * l.coeffs[1] +
             Wide(p.coords[2]) * l.coeffs[2];
  return dot == 0;
}

ProjectivePoint meet(const ProjectiveLine& a, const ProjectiveLine& b) {
  const Triple& u = a.coeffs;
  const Triple& v = b.coeffs;
  Wide x = Wide(u[1]) * v[2] - Wide(u[2]) * v[1];
  Wide y = Wide(u[2]) * v[0] - Wide(u[0]) * v[2];
  Wide z = Wide(u[0]) * v[1] - Wide(u[1]) * v[0];
  if (x == 0 && y == 0 && z == 0) {
    fail(ErrorCode::BadInput, "cannot intersect a line with itself");
  }
  Triple t = canonical_triple(x, y, z);
  return ProjectivePoint{t};
}

Arrangement make_arrangement(const std::vector<Triple>& triples) {
  Arrangement arr;
  std::map<Triple, int> seen;
  int index = 0;
  for (const Triple& t : triples) {
    ProjectiveLine line = ProjectiveLine::from_triple(t[0], t[1], t[2]);
    auto [it, inserted] = seen.emplace(line.coeffs, index);
    if (!inserted) {
      std::ostringstream msg;
      msg << "rows " << it->second << " and " << index << " define the same line";
      fail(ErrorCode::DuplicateLine, msg.str());
    }
    arr.lines.push_back(line);
    ++index;
  }
  if (arr.lines.empty()) {
    fail(ErrorCode::BadInput, "an arrangement needs at least one line");
  }
  return arr;
}

Arrangement parse_arrangement(const std::string& text) {
  std::vector<Triple> triples;
  std::istringstream in(text);
  std::string raw;
  while (std::getline(in, raw)) {
    const auto hash = raw.find('#');
    if (hash != std::string::npos) raw.erase(hash);
    std::istringstream row(raw);
    std::vector<std::string> tokens;
    std::string token;
    while (row >> token) tokens.push_back(token);
    if (tokens.empty()) continue;
    if (tokens.size() != 3) {
      fail(ErrorCode::MalformedNumber,
           "expected three numbers per row, got " + std::to_string(tokens.size()));
    }
    std::array<Rat, 3> values;
    for (int i = 0; i < 3; ++i) values[i] = rat_from_string(tokens[i]);
    // clear denominators so the row becomes an integer triple
    mpz_class lcm = 1;
    for (const Rat& v : values) {
      mpz_class l;
      mpz_lcm(l.get_mpz_t(), lcm.get_mpz_t(), v.get_den().get_mpz_t());
      lcm = l;
    }
    Triple t;
    for (int i = 0; i < 3; ++i) {
      mpz_class scaled = values[i].get_num() * (lcm / values[i].get_den());
      if (!scaled.fits_slong_p()) {
        fail(ErrorCode::MalformedNumber, "coefficient too large: '" + tokens[i] + "'");
      }
      t[i] = scaled.get_si();
    }
    triples.push_back(t);
  }
  return make_arrangement(triples);
}

std::string arrangement_to_text(const Arrangement& arr) {
  std::ostringstream out;
  for (const ProjectiveLine& line : arr.lines) {
    out << line.coeffs[0] << ' ' << line.coeffs[1] << ' ' << line.coeffs[2] << '\n';
  }
  return out.str();
}

bool Flat::contains_line(int line) const {
  return std::binary_search(incident.begin(), incident.end(), line);
}

Lattice intersection_lattice(const Arrangement& arr) {
  std::map<ProjectivePoint, std::set<int>> buckets;
  const int n = static_cast<int>(arr.size());
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      ProjectivePoint p = meet(arr.lines[i], arr.lines[j]);
      auto& bucket = buckets[p];
      bucket.insert(i);
      bucket.insert(j);
    }
  }
  Lattice lattice;
  lattice.flats.reserve(buckets.size());
  for (auto& [point, incident] : buckets) {
    Flat flat;
    flat.point = point;
    flat.incident.assign(incident.begin(), incident.end());
    lattice.flats.push_back(std::move(flat));
  }
  return lattice;
}

const char* arr_class_name(ArrClass tag) {
  switch (tag) {
    case ArrClass::Nodal: return "Nodal";
    case ArrClass::C1: return "C1";
    case ArrClass::C2: return "C2";
    case ArrClass::Other: return "Other";
  }
  return "?";
}

ClassInfo classify(const Arrangement& arr) {
  return classify(arr, intersection_lattice(arr));
}

ClassInfo classify(const Arrangement& arr, const Lattice& lattice) {
  ClassInfo info;
  for (std::size_t f = 0; f < lattice.flats.size(); ++f) {
    if (lattice.flats[f].multiplicity() >= 3) info.high_flats.push_back(f);
  }
  if (info.high_flats.empty()) {
    info.tag = ArrClass::Nodal;
    return info;
  }

  const int n = static_cast<int>(arr.size());
  auto covers = [&](int line, std::size_t flat_index) {
    return lattice.flats[flat_index].contains_line(line);
  };

  for (int h = 0; h < n; ++h) {
    bool all = true;
    for (std::size_t f : info.high_flats) {
      if (!covers(h, f)) {
        all = false;
        break;
      }
    }
    if (all) info.line_covers.push_back(h);
  }
  if (!info.line_covers.empty()) {
    info.tag = ArrClass::C1;
    info.h0 = info.line_covers.front();
    return info;
  }

  std::size_t best_covered = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      std::size_t covered = 0;
      for (std::size_t f : info.high_flats) {
        if (covers(i, f) || covers(j, f)) ++covered;
      }
      if (covered == info.high_flats.size()) {
        info.pair_covers.emplace_back(i, j);
      }
      if (covered > best_covered) {
        best_covered = covered;
        info.nearest_pair = std::make_pair(i, j);
      }
    }
  }
  if (!info.pair_covers.empty()) {
    info.tag = ArrClass::C2;
    info.h0 = info.pair_covers.front().first;
    info.hinf = info.pair_covers.front().second;
    info.nearest_pair.reset();
    return info;
  }

  info.tag = ArrClass::Other;
  info.uncovered = info.high_flats.size() - best_covered;
  return info;
}

}  // namespace resovar
