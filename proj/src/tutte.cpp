#include "resovar/tutte.hpp"

#include <cstdint>
#include <sstream>
#include <vector>

#include "resovar/errors.hpp"

namespace resovar {

namespace {

using Wide = __int128;
using Mask = std::uint32_t;

Wide cross_component(const Triple& a, const Triple& b, int i, int j) {
  return Wide(a[i]) * b[j] - Wide(a[j]) * b[i];
}

bool parallel_vectors(const Triple& a, const Triple& b) {
  return cross_component(a, b, 0, 1) == 0 && cross_component(a, b, 0, 2) == 0 &&
         cross_component(a, b, 1, 2) == 0;
}

Wide det3(const Triple& a, const Triple& b, const Triple& c) {
  return Wide(a[0]) * cross_component(b, c, 1, 2) - Wide(a[1]) * cross_component(b, c, 0, 2) +
         Wide(a[2]) * cross_component(b, c, 0, 1);
}

struct MaskRank {
  const std::vector<Triple>& vectors;

  int rank(Mask mask) const {
    int first = -1;
    for (std::size_t i = 0; i < vectors.size(); ++i) {
      if (mask & (Mask(1) << i)) {
        first = static_cast<int>(i);
        break;
      }
    }
    if (first < 0) return 0;
    int second = -1;
    for (std::size_t i = first + 1; i < vectors.size(); ++i) {
      if ((mask & (Mask(1) << i)) && !parallel_vectors(vectors[first], vectors[i])) {
        second = static_cast<int>(i);
        break;
      }
    }
    if (second < 0) return 1;
    for (std::size_t i = second + 1; i < vectors.size(); ++i) {
      if ((mask & (Mask(1) << i)) &&
          det3(vectors[first], vectors[second], vectors[i]) != 0) {
        return 3;
      }
    }
    return 2;
  }
};

void add_monomial(TuttePolynomial& p, int i, int j, long long c) {
  auto [it, inserted] = p.coeffs.emplace(std::make_pair(i, j), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) p.coeffs.erase(it);
  }
}

TuttePolynomial add(const TuttePolynomial& a, const TuttePolynomial& b) {
  TuttePolynomial out = a;
  for (const auto& [key, c] : b.coeffs) add_monomial(out, key.first, key.second, c);
  return out;
}

struct TutteComputer {
  MaskRank ranker;
  bool reversed;
  std::map<std::pair<Mask, Mask>, TuttePolynomial> memo;
  std::size_t n;

  TuttePolynomial run(Mask ground, Mask contracted) {
    auto key = std::make_pair(ground, contracted);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    const int contracted_rank = ranker.rank(contracted);
    const int total_rank = ranker.rank(ground | contracted) - contracted_rank;

    int loops = 0;
    int coloops = 0;
    int branch = -1;
    for (std::size_t step = 0; step < n; ++step) {
      const std::size_t e = reversed ? n - 1 - step : step;
      const Mask bit = Mask(1) << e;
      if (!(ground & bit)) continue;
      if (ranker.rank(contracted | bit) == contracted_rank) {
        ++loops;
        continue;
      }
      if (ranker.rank((ground & ~bit) | contracted) - contracted_rank < total_rank) {
        ++coloops;
        continue;
      }
      if (branch < 0) branch = static_cast<int>(e);
    }

    TuttePolynomial result;
    if (branch < 0) {
      add_monomial(result, coloops, loops, 1);
    } else {
      const Mask bit = Mask(1) << branch;
      result = add(run(ground & ~bit, contracted),        // delete
                   run(ground & ~bit, contracted | bit))  // contract
          ;
    }
    memo.emplace(key, result);
    return result;
  }
};

TuttePolynomial compute(const Arrangement& arr, bool reversed) {
  if (arr.size() > 30) {
    fail(ErrorCode::BadInput, "arrangement too large for the Tutte computation");
  }
  std::vector<Triple> vectors;
  vectors.reserve(arr.size());
  for (const ProjectiveLine& line : arr.lines) vectors.push_back(line.coeffs);
  TutteComputer computer{MaskRank{vectors}, reversed, {}, arr.size()};
  const Mask ground = arr.size() == 32 ? ~Mask(0) : (Mask(1) << arr.size()) - 1;
  return computer.run(ground, 0);
}

}  // namespace

long long TuttePolynomial::evaluate(long long x, long long y) const {
  long long total = 0;
  for (const auto& [key, c] : coeffs) {
    long long term = c;
    for (int i = 0; i < key.first; ++i) term *= x;
    for (int j = 0; j < key.second; ++j) term *= y;
    total += term;
  }
  return total;
}

std::string TuttePolynomial::to_string() const {
  // highest total degree first, then highest x-degree
  std::vector<std::pair<std::pair<int, int>, long long>> terms(coeffs.begin(), coeffs.end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    const int da = a.first.first + a.first.second;
    const int db = b.first.first + b.first.second;
    if (da != db) return da > db;
    return a.first.first > b.first.first;
  });
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, c] : terms) {
    const auto [i, j] = key;
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << "-";
    first = false;
    const long long mag = c < 0 ? -c : c;
    const bool constant = i == 0 && j == 0;
    if (mag != 1 || constant) out << mag;
    if (i > 0) {
      out << "x";
      if (i > 1) out << "^" << i;
    }
    if (j > 0) {
      out << "y";
      if (j > 1) out << "^" << j;
    }
  }
  if (first) out << "0";
  return out.str();
}

TuttePolynomial tutte_polynomial(const Arrangement& arr) { return compute(arr, false); }

int matroid_rank(const Arrangement& arr) {
  std::vector<Triple> vectors;
  for (const ProjectiveLine& line : arr.lines) vectors.push_back(line.coeffs);
  MaskRank ranker{vectors};
  const Mask all = arr.size() >= 32 ? ~Mask(0) : (Mask(1) << arr.size()) - 1;
  return ranker.rank(all);
}

namespace detail {

TuttePolynomial tutte_polynomial_reversed(const Arrangement& arr) { return compute(arr, true); }

}  // namespace detail

}  // namespace resovar
