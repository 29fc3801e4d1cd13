#include "dergraph/perm.hpp"

#include <algorithm>
#include <cctype>

#include "dergraph/error.hpp"

namespace dergraph {

Permutation Permutation::identity(std::size_t degree) {
  Permutation p;
  p.images_.resize(degree);
  for (std::size_t i = 0; i < degree; ++i) p.images_[i] = static_cast<Point>(i);
  return p;
}

Permutation Permutation::from_images(std::vector<Point> images) {
  std::vector<bool> seen(images.size(), false);
  for (Point v : images) {
    if (v >= images.size() || seen[v])
      throw Error(Errc::parse, "image array is not a bijection");
    seen[v] = true;
  }
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) r.images_[images_[i]] = static_cast<Point>(i);
  return r;
}

std::vector<Point> Permutation::fixed_points() const {
  std::vector<Point> fp;
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] == i) fp.push_back(static_cast<Point>(i));
  return fp;
}

bool Permutation::is_derangement() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] == i) return false;
  return true;
}

std::vector<std::vector<Point>> Permutation::cycles() const {
  std::vector<std::vector<Point>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i] || images_[i] == i) {
      seen[i] = true;
      continue;
    }
    std::vector<Point> cyc;
    Point j = static_cast<Point>(i);
    while (!seen[j]) {
      seen[j] = true;
      cyc.push_back(j);
      j = images_[j];
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  Permutation r;
  r.images_.resize(a.images_.size());
  for (std::size_t i = 0; i < a.images_.size(); ++i) r.images_[i] = b.images_[a.images_[i]];
  return r;
}

namespace {

struct Cursor {
  std::string_view s;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  char take() {
    skip_ws();
    return s[i++];
  }
  long number() {
    skip_ws();
    std::size_t start = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    if (i == start) throw Error(Errc::parse, "expected a number in permutation text");
    long v = 0;
    for (std::size_t k = start; k < i; ++k) {
      v = v * 10 + (s[k] - '0');
      if (v > 1 << 20) throw Error(Errc::parse, "point out of range in permutation text");
    }
    return v;
  }
};

Permutation parse_image_list(std::string_view text, std::size_t degree) {
  Cursor c{text};
  c.take(); // '['
  std::vector<Point> images;
  if (c.peek() != ']') {
    while (true) {
      long v = c.number();
      if (v < 0 || static_cast<std::size_t>(v) >= degree)
        throw Error(Errc::parse, "image " + std::to_string(v) + " out of range for degree " +
                                     std::to_string(degree));
      images.push_back(static_cast<Point>(v));
      char ch = c.take();
      if (ch == ']') break;
      if (ch != ',') throw Error(Errc::parse, "malformed image list");
    }
  } else {
    c.take();
  }
  if (!c.done()) throw Error(Errc::parse, "trailing characters after image list");
  if (images.size() != degree)
    throw Error(Errc::parse, "image list has length " + std::to_string(images.size()) +
                                 ", expected " + std::to_string(degree));
  return Permutation::from_images(std::move(images));
}

} // namespace

Permutation parse_permutation(std::string_view text, std::size_t degree) {
  if (degree < 1 || degree > 65535)
    throw Error(Errc::parse, "degree out of supported range [1, 65535]");
  Cursor c{text};
  if (c.done()) throw Error(Errc::parse, "empty permutation text");
  if (c.peek() == '[') return parse_image_list(text, degree);

  std::vector<Point> images(degree);
  for (std::size_t i = 0; i < degree; ++i) images[i] = static_cast<Point>(i);
  std::vector<bool> used(degree, false);

  while (!c.done()) {
    if (c.take() != '(') throw Error(Errc::parse, "expected '(' in cycle notation");
    if (c.peek() == ')') { // "()" — empty cycle, allowed
      c.take();
      continue;
    }
    std::vector<Point> cyc;
    while (true) {
      long v = c.number(); // 1-based on input
      if (v < 1 || static_cast<std::size_t>(v) > degree)
        throw Error(Errc::parse, "point " + std::to_string(v) + " out of range for degree " +
                                     std::to_string(degree));
      Point p = static_cast<Point>(v - 1);
      if (used[p])
        throw Error(Errc::parse, "point " + std::to_string(v) + " repeated in cycles");
      used[p] = true;
      cyc.push_back(p);
      char ch = c.take();
      if (ch == ')') break;
      if (ch != ',') throw Error(Errc::parse, "malformed cycle notation");
    }
    for (std::size_t k = 0; k < cyc.size(); ++k) images[cyc[k]] = cyc[(k + 1) % cyc.size()];
  }
  return Permutation::from_images(std::move(images));
}

std::string to_cycle_string(const Permutation& p) {
  auto cycs = p.cycles();
  if (cycs.empty()) return "()";
  std::string out;
  for (const auto& cyc : cycs) {
    out += '(';
    for (std::size_t k = 0; k < cyc.size(); ++k) {
      if (k) out += ',';
      out += std::to_string(cyc[k] + 1);
    }
    out += ')';
  }
  return out;
}

} // namespace dergraph
