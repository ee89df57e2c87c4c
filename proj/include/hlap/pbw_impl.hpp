// Template definitions for pbw.hpp.
#ifndef HLAP_PBW_IMPL_HPP
#define HLAP_PBW_IMPL_HPP

#include <algorithm>
#include <mutex>
#include <set>

namespace hlap {

template <class S>
EnvAlgebra<S>::EnvAlgebra(const std::vector<Mat<S>>& ad, std::vector<int> ordering, std::vector<std::string> names)
    : ordering_(std::move(ordering)), names_(std::move(names)) {
  const int d = static_cast<int>(ad.size());
  if (static_cast<int>(ordering_.size()) != d || std::set<int>(ordering_.begin(), ordering_.end()).size() != ordering_.size() ||
      (d > 0 && (*std::min_element(ordering_.begin(), ordering_.end()) != 0 ||
                 *std::max_element(ordering_.begin(), ordering_.end()) != d - 1)))
    throw std::invalid_argument("ordering is not a permutation of the basis");
  if (d > 250) throw std::invalid_argument("basis too large for 8-bit monomials");
  position_.assign(d, 0);
  for (int p = 0; p < d; ++p) position_[ordering_[p]] = p;
  bracket_.assign(d, std::vector<std::vector<std::pair<int, S>>>(d));
  for (int p = 0; p < d; ++p)
    for (int q = 0; q < d; ++q) {
      const auto& col = ad[ordering_[p]];
      for (int k = 0; k < d; ++k) {
        const S& c = col(k, ordering_[q]);
        if (!is_zero(c)) bracket_[p][q].emplace_back(position_[k], c);
      }
    }
}

template <class S>
std::vector<std::string> EnvAlgebra<S>::ordered_names() const {
  std::vector<std::string> out;
  for (int i : ordering_) out.push_back(i < static_cast<int>(names_.size()) ? names_[i] : "e" + std::to_string(i));
  return out;
}

template <class S>
const typename EnvAlgebra<S>::Terms& EnvAlgebra<S>::straighten(const Monomial& u, int pos) const {
  const auto key = std::make_pair(u, pos);
  {
    std::shared_lock lock(mutex_);
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
  }
  Terms out;
  if (u.empty() || u.back() <= pos) {
    Monomial v = u;
    v.push_back(static_cast<std::uint8_t>(pos));
    out.emplace(std::move(v), S(1));
  } else {
    const int last = u.back();
    const Monomial prefix(u.begin(), u.end() - 1);
    // prefix * last * g = (prefix * g) * last + prefix * [last, g]
    out = times_generator(straighten(prefix, pos), last);
    for (const auto& [k, c] : bracket_[last][pos])
      for (const auto& [m, v] : straighten(prefix, k)) add_to<S>(out, m, c * v);
  }
  std::unique_lock lock(mutex_);
  return memo_.try_emplace(key, std::move(out)).first->second;
}

template <class S>
typename EnvAlgebra<S>::Terms EnvAlgebra<S>::times_generator(const Terms& t, int pos) const {
  Terms out;
  for (const auto& [m, c] : t)
    for (const auto& [m2, c2] : straighten(m, pos)) add_to<S>(out, m2, c * c2);
  return out;
}

template <class S>
typename EnvAlgebra<S>::Terms EnvAlgebra<S>::multiply(const Terms& a, const Terms& b) const {
  Terms out;
  for (const auto& [mb, cb] : b) {
    Terms partial = a;
    for (auto g : mb) partial = times_generator(partial, g);
    for (const auto& [m, c] : partial) add_to<S>(out, m, c * cb);
  }
  return out;
}

template <class S>
EnvElement<S> normalize(const std::shared_ptr<const EnvAlgebra<S>>& alg, const std::vector<int>& product) {
  typename EnvAlgebra<S>::Terms t;
  t.emplace(typename EnvAlgebra<S>::Monomial{}, S(1));
  for (int i : product) {
    if (i < 0 || i >= alg->dim()) throw std::invalid_argument("basis index out of range");
    t = alg->times_generator(t, alg->position_of(i));
  }
  return EnvElement<S>(alg, std::move(t));
}

}  // namespace hlap

#endif
