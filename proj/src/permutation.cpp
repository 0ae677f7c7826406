#include "psi/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "psi/errors.hpp"

namespace psi {

Permutation Permutation::identity(std::size_t d) {
  Permutation p;
  p.images_.resize(d);
  std::iota(p.images_.begin(), p.images_.end(), 0u);
  return p;
}

Permutation Permutation::from_images(const std::vector<std::size_t>& one_based) {
  const std::size_t d = one_based.size();
  std::vector<bool> seen(d, false);
  Permutation p;
  p.images_.reserve(d);
  for (std::size_t v : one_based) {
    if (v < 1 || v > d || seen[v - 1]) {
      throw DomainError("image list is not a permutation of 1.." + std::to_string(d));
    }
    seen[v - 1] = true;
    p.images_.push_back(static_cast<std::uint32_t>(v - 1));
  }
  return p;
}

Permutation Permutation::transposition(std::size_t i, std::size_t j, std::size_t d) {
  Permutation p = identity(d);
  std::swap(p.images_.at(i), p.images_.at(j));
  return p;
}

namespace {

std::vector<std::size_t> read_numbers(std::string_view body, std::size_t offset) {
  std::vector<std::size_t> out;
  std::size_t i = 0;
  while (i < body.size()) {
    char c = body[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',') {
      ++i;
      continue;
    }
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw ParseError(std::string("unexpected character '") + c + "' in permutation", offset + i);
    }
    std::size_t value = 0;
    while (i < body.size() && std::isdigit(static_cast<unsigned char>(body[i]))) {
      value = value * 10 + static_cast<std::size_t>(body[i] - '0');
      ++i;
    }
    out.push_back(value);
  }
  return out;
}

}  // namespace

Permutation Permutation::parse(std::string_view text, std::size_t d) {
  std::size_t start = text.find_first_not_of(" \t");
  if (start == std::string_view::npos) throw ParseError("empty permutation", 0);
  if (text[start] == '[') {
    std::size_t close = text.find(']', start);
    if (close == std::string_view::npos) throw ParseError("missing ']'", text.size());
    auto images = read_numbers(text.substr(start + 1, close - start - 1), start + 1);
    if (images.size() != d) {
      throw DimensionMismatch("permutation has " + std::to_string(images.size()) +
                              " images, expected " + std::to_string(d));
    }
    return from_images(images);
  }
  Permutation result = identity(d);
  std::size_t i = start;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    if (text[i] != '(') throw ParseError("expected '(' in cycle notation", i);
    std::size_t close = text.find(')', i);
    if (close == std::string_view::npos) throw ParseError("missing ')'", text.size());
    auto cycle = read_numbers(text.substr(i + 1, close - i - 1), i + 1);
    std::vector<std::size_t> images(d);
    std::iota(images.begin(), images.end(), std::size_t{1});
    for (std::size_t k = 0; k < cycle.size(); ++k) {
      if (cycle[k] < 1 || cycle[k] > d) throw ParseError("cycle entry out of range", i);
      images[cycle[k] - 1] = cycle[(k + 1) % cycle.size()];
    }
    // Cycles compose right to left, as products of permutations.
    result = result * from_images(images);
    i = close + 1;
  }
  return result;
}

Permutation Permutation::inverse() const {
  Permutation p;
  p.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) p.images_[images_[i]] = static_cast<std::uint32_t>(i);
  return p;
}

bool Permutation::is_even() const {
  std::vector<bool> visited(images_.size(), false);
  std::size_t transpositions = 0;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (visited[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !visited[j]; j = images_[j]) {
      visited[j] = true;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

std::string Permutation::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(images_[i] + 1);
  }
  return out + "]";
}

std::string Permutation::to_cycle_string() const {
  std::string out;
  std::vector<bool> visited(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (visited[i] || images_[i] == i) continue;
    out += '(';
    for (std::size_t j = i; !visited[j]; j = images_[j]) {
      visited[j] = true;
      if (j != i) out += ' ';
      out += std::to_string(j + 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation operator*(const Permutation& sigma, const Permutation& tau) {
  if (sigma.degree() != tau.degree()) throw DimensionMismatch("composing permutations of different degree");
  Permutation p;
  p.images_.resize(tau.degree());
  for (std::size_t i = 0; i < tau.degree(); ++i) p.images_[i] = sigma.images_[tau.images_[i]];
  return p;
}

std::vector<Permutation> symmetric_group(std::size_t d, std::size_t cap) {
  if (d > cap) {
    throw GroupCapExceeded("S_" + std::to_string(d) + " exceeds the enumeration cap of " +
                           std::to_string(cap) + " variables");
  }
  std::vector<Permutation> out;
  out.reserve(factorial(d));
  std::vector<std::size_t> images(d);
  std::iota(images.begin(), images.end(), std::size_t{1});
  do {
    out.push_back(Permutation::from_images(images));
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

std::uint64_t factorial(std::size_t n) {
  std::uint64_t result = 1;
  for (std::size_t i = 2; i <= n; ++i) result *= i;
  return result;
}

}  // namespace psi
