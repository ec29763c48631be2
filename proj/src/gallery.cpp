#include "resovar/gallery.hpp"

#include <optional>

#include "resovar/errors.hpp"

namespace resovar {

namespace {

Arrangement ex3() {
  return make_arrangement({
      {1, -1, 0},   // x - y, the H0 of the running example
      {1, 0, 0},    // x
      {0, 1, 0},    // y
      {1, 0, -1},   // x - z
      {0, 1, -1},   // y - z
      {1, 1, -2},   // x + y - 2z
      {0, 0, 1},    // z, the line at infinity
  });
}

Arrangement braid() {
  return make_arrangement({
      {1, 0, 0},    // x
      {0, 1, 0},    // y
      {0, 0, 1},    // z
      {1, -1, 0},   // x - y
      {1, 0, -1},   // x - z
      {0, 1, -1},   // y - z
  });
}

Arrangement other7() {
  return make_arrangement({
      {1, 0, 0},     // x = 0
      {0, 1, 0},     // y = 0
      {1, -1, 0},    // y = x
      {0, 1, -1},    // y = 1
      {1, -1, 1},    // y = x + 1
      {1, 0, -1},    // x = 1
      {1, -1, -1},   // y = x - 1
  });
}

Arrangement central(int n) {
  if (n < 1) fail(ErrorCode::UnknownFixture, "central(n) needs n >= 1");
  std::vector<Triple> triples;
  triples.push_back({0, 1, 0});  // y
  if (n > 1) triples.push_back({1, 0, 0});  // x
  for (int i = 1; i + 2 <= n; ++i) triples.push_back({1, -i, 0});  // x = i*y
  return make_arrangement(triples);
}

Arrangement nodal(int n) {
  if (n < 1) fail(ErrorCode::UnknownFixture, "nodal(n) needs n >= 1");
  // tangent lines of the conic y = x^2 at x = t: three tangents of a smooth
  // conic are never concurrent, so every point is double
  std::vector<Triple> triples;
  for (long long t = 0; t < n; ++t) triples.push_back({2 * t, -1, -t * t});
  return make_arrangement(triples);
}

std::optional<int> parse_parametric(const std::string& name, const std::string& prefix) {
  // accepts prefix(n) and prefix:n
  if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0) {
    return std::nullopt;
  }
  std::string rest = name.substr(prefix.size());
  if (rest.size() >= 2 && rest.front() == '(' && rest.back() == ')') {
    rest = rest.substr(1, rest.size() - 2);
  } else if (rest.front() == ':') {
    rest = rest.substr(1);
  } else {
    return std::nullopt;
  }
  try {
    std::size_t used = 0;
    const int value = std::stoi(rest, &used);
    if (used != rest.size()) return std::nullopt;
    return value;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

Arrangement expect_class(Arrangement arr, ArrClass tag, const std::string& name) {
  const ClassInfo info = classify(arr);
  if (info.tag != tag) {
    throw std::logic_error("fixture " + name + " classified as " + arr_class_name(info.tag) +
                           ", expected " + arr_class_name(tag));
  }
  return arr;
}

}  // namespace

Arrangement gallery(const std::string& name) {
  if (name == "ex3") return ex3();
  if (name == "braid") return braid();
  if (name == "parallelogram_min") return grid_with_diagonal(2, 2);
  if (name == "other7") return other7();
  if (auto n = parse_parametric(name, "central")) return central(*n);
  if (auto n = parse_parametric(name, "nodal")) return nodal(*n);
  fail(ErrorCode::UnknownFixture, "unknown fixture '" + name + "'");
}

std::vector<std::string> gallery_names() {
  return {"central(n)", "nodal(n)", "ex3", "braid", "parallelogram_min", "other7"};
}

Arrangement central_with_infinity(int n) {
  Arrangement arr = central(n);
  arr.lines.push_back(ProjectiveLine::from_triple(0, 0, 1));
  return arr;
}

Arrangement grid_with_diagonal(int a, int b) {
  if (a < 2 || b < 2) fail(ErrorCode::UnknownFixture, "grid_with_diagonal needs a, b >= 2");
  std::vector<Triple> triples;
  for (long long i = 0; i < a; ++i) triples.push_back({1, 0, -i});  // x = i
  for (long long j = 0; j < b; ++j) triples.push_back({0, 1, -j});  // y = j
  triples.push_back({1, -1, 0});  // x = y
  triples.push_back({0, 0, 1});   // z
  return make_arrangement(triples);
}

Arrangement c1_families(const std::vector<int>& sizes) {
  // family f has slope f and intercepts k * 10^f; the decades keep any
  // three lines from being concurrent for up to three families
  if (sizes.empty() || sizes.size() > 3) {
    fail(ErrorCode::UnknownFixture, "c1_families takes one to three family sizes");
  }
  std::vector<Triple> triples;
  long long decade = 1;
  for (std::size_t f = 0; f < sizes.size(); ++f) {
    if (sizes[f] < 2) fail(ErrorCode::UnknownFixture, "families need at least two lines");
    for (int k = 1; k <= sizes[f]; ++k) {
      // y = f*x + k*decade
      triples.push_back({static_cast<long long>(f), -1, k * decade});
    }
    decade *= 10;
  }
  triples.push_back({0, 0, 1});
  return make_arrangement(triples);
}

std::vector<NamedArrangement> corpus_c1() {
  std::vector<NamedArrangement> corpus;
  const std::vector<std::vector<int>> shapes = {
      {2}, {3}, {4}, {5}, {2, 2}, {3, 2}, {3, 3}, {4, 2}, {2, 2, 2}, {3, 2, 2},
  };
  for (const std::vector<int>& shape : shapes) {
    std::string name = "c1";
    for (int s : shape) name += "_" + std::to_string(s);
    corpus.push_back({name, expect_class(c1_families(shape), ArrClass::C1, name)});
  }
  return corpus;
}

std::vector<NamedArrangement> corpus_c2() {
  std::vector<NamedArrangement> corpus;
  auto add = [&corpus](const std::string& name, Arrangement arr) {
    corpus.push_back({name, expect_class(std::move(arr), ArrClass::C2, name)});
  };
  add("parallelogram_min", grid_with_diagonal(2, 2));
  add("braid", braid());
  add("ex3", ex3());
  add("grid_2_3", grid_with_diagonal(2, 3));
  add("grid_2_4", grid_with_diagonal(2, 4));
  add("grid_3_3", grid_with_diagonal(3, 3));
  add("grid_3_4", grid_with_diagonal(3, 4));
  add("grid_4_4", grid_with_diagonal(4, 4));
  // a parallelogram with unequal sides, diagonal 2x - 3y through (0,0), (3,2)
  add("skew_pmin", make_arrangement({
                       {1, 0, 0},    // x = 0
                       {1, 0, -3},   // x = 3
                       {0, 1, 0},    // y = 0
                       {0, 1, -2},   // y = 2
                       {2, -3, 0},   // 2x = 3y
                       {0, 0, 1},    // z
                   }));
  // ex3 with one more line parallel to x = 0
  add("ex3_plus", make_arrangement({
                      {1, -1, 0},
                      {1, 0, 0},
                      {0, 1, 0},
                      {1, 0, -1},
                      {0, 1, -1},
                      {1, 1, -2},
                      {0, 0, 1},
                      {1, 0, 1},  // x = -1
                  }));
  return corpus;
}

}  // namespace resovar
