#include "dgolod/d_calculus.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "dgolod/error.hpp"

namespace dgolod {

Permutation::Permutation(std::vector<std::size_t> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (auto v : images_) {
    if (v >= images_.size() || seen[v]) throw PreconditionError("not a permutation");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<std::size_t> im(n);
  std::iota(im.begin(), im.end(), 0);
  return Permutation(std::move(im));
}

Permutation Permutation::reverse(std::size_t n) {
  std::vector<std::size_t> im(n);
  for (std::size_t i = 0; i < n; ++i) im[i] = n - 1 - i;
  return Permutation(std::move(im));
}

Permutation Permutation::parse(const std::string& text, std::size_t n) {
  if (text == "reverse") return reverse(n);
  if (text == "id" || text == "identity") return identity(n);
  std::vector<std::size_t> im;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t pos = 0;
    long v = 0;
    try {
      v = std::stol(item, &pos);
    } catch (const std::exception&) {
      throw PreconditionError("bad permutation entry '" + item + "'");
    }
    if (pos != item.size() || v < 1) throw PreconditionError("bad permutation entry '" + item + "'");
    im.push_back(static_cast<std::size_t>(v - 1));
  }
  if (im.size() != n) {
    throw PreconditionError("permutation has " + std::to_string(im.size()) + " entries, ring has " +
                            std::to_string(n) + " variables");
  }
  return Permutation(std::move(im));
}

std::vector<Permutation> Permutation::all(std::size_t n) {
  std::vector<std::size_t> im(n);
  std::iota(im.begin(), im.end(), 0);
  std::vector<Permutation> out;
  do {
    out.emplace_back(im);
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<std::size_t> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = i;
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != i) return false;
  }
  return true;
}

std::string Permutation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(images_[i] + 1);
  }
  return out;
}

Polynomial d_op(const Polynomial& f, std::size_t r) {
  if (r >= f.nvars()) throw PreconditionError("variable index out of range");
  if (!f.constant_term().is_zero()) {
    throw NonProperElement("d^r is defined only on elements without constant term, got " +
                           to_string(f));
  }
  return exact_div_var(zero_prefix_sub(f, r) - zero_prefix_sub(f, r + 1), r);
}

Polynomial d_sigma_op(const Polynomial& f, std::size_t r, const Permutation& sigma) {
  if (sigma.size() != f.nvars()) throw RingMismatch("permutation size differs from ring");
  return relabel(d_op(relabel(f, sigma.inverse().images()), r), sigma.images());
}

Monomial d_sigma_monomial(const Monomial& u, const Permutation& sigma) {
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    const std::size_t v = sigma(i);
    if (u[v] > 0) return u / Monomial::var(v);
  }
  throw NonProperElement("d_sigma of the monomial 1");
}

IdealGens d_ideal(const IdealGens& ideal, const Permutation& sigma) {
  ideal.require_proper();
  std::vector<Polynomial> out;
  for (const auto& f : ideal.gens()) {
    for (std::size_t r = 0; r < ideal.ring().nvars(); ++r) {
      Polynomial g = d_sigma_op(f, r, sigma);
      if (!g.is_zero() && std::find(out.begin(), out.end(), g) == out.end()) {
        out.push_back(std::move(g));
      }
    }
  }
  return IdealGens(ideal.ring(), std::move(out));
}

MonomialIdeal d_ideal(const MonomialIdeal& ideal, const Permutation& sigma) {
  if (!ideal.is_proper()) throw PreconditionError("d_sigma needs a proper nonzero monomial ideal");
  std::vector<Monomial> out;
  for (const auto& u : ideal.gens()) {
    Polynomial g = ideal.ring().term(u);
    for (std::size_t r = 0; r < ideal.nvars(); ++r) {
      Polynomial h = d_sigma_op(g, r, sigma);
      if (!h.is_zero()) out.push_back(h.terms().front().mono);
    }
  }
  return MonomialIdeal(ideal.ring(), std::move(out));
}

}  // namespace dgolod
