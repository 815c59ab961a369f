#include "caydis/group.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "caydis/errors.hpp"

namespace caydis {

namespace {

constexpr long long kMaxOrder = 1'000'000;
constexpr long long kMaxAutCandidates = 4'000'000;

Family classify(const std::vector<int>& factors, long long n) {
  if (std::gcd(n, 6LL) == 1) return Family::TypeI;
  // Z_2^r x N form: every 2-part is trivial or Z_2, odd part non-cyclic.
  std::vector<int> odd;
  for (int d : factors) {
    int two = 1;
    while (d % 2 == 0) {
      d /= 2;
      two *= 2;
    }
    if (two > 2) return Family::Other;
    if (d > 1) odd.push_back(d);
  }
  if (odd.empty()) return Family::Other;
  for (std::size_t i = 0; i < odd.size(); ++i)
    for (std::size_t j = i + 1; j < odd.size(); ++j)
      if (std::gcd(odd[i], odd[j]) > 1) return Family::TypeII;
  return Family::Other;  // odd part cyclic
}

}  // namespace

const char* family_name(Family f) {
  switch (f) {
    case Family::TypeI:
      return "type1";
    case Family::TypeII:
      return "type2";
    default:
      return "other";
  }
}

bool Subgroup::contains(int index) const {
  return std::binary_search(elements.begin(), elements.end(), index);
}

Group::Group(std::vector<int> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw std::invalid_argument("empty factor list");
  long long n = 1;
  for (int d : factors_) {
    if (d < 2) throw std::invalid_argument("group factors must be >= 2");
    n *= d;
    if (n > kMaxOrder) throw ScaleError("group order exceeds supported scale");
  }
  n_ = static_cast<int>(n);
  family_ = classify(factors_, n);

  // Lexicographic encoding: the last factor varies fastest.
  int k = rank();
  strides_.assign(k, 1);
  for (int i = k - 2; i >= 0; --i) strides_[i] = strides_[i + 1] * factors_[i + 1];

  coords_.resize(static_cast<std::size_t>(n_) * k);
  for (int v = 0; v < n_; ++v) {
    int rest = v;
    for (int i = 0; i < k; ++i) {
      coords_[static_cast<std::size_t>(v) * k + i] = rest / strides_[i];
      rest %= strides_[i];
    }
  }

  neg_.resize(n_);
  order_.resize(n_);
  for (int v = 0; v < n_; ++v) {
    const int* c = &coords_[static_cast<std::size_t>(v) * k];
    int nv = 0;
    long long ord = 1;
    for (int i = 0; i < k; ++i) {
      nv += ((factors_[i] - c[i]) % factors_[i]) * strides_[i];
      ord = std::lcm(ord, static_cast<long long>(factors_[i] / std::gcd(c[i], factors_[i])));
    }
    neg_[v] = nv;
    order_[v] = static_cast<int>(ord);
  }
  for (int v = 0; v < n_; ++v)
    if (neg_[v] == v) involutions_.push_back(v);
}

Group Group::parse(std::string_view text) {
  std::vector<int> factors;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view tok = text.substr(pos, comma - pos);
    while (!tok.empty() && (tok.front() == ' ' || tok.front() == '\t')) tok.remove_prefix(1);
    while (!tok.empty() && (tok.back() == ' ' || tok.back() == '\t')) tok.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
      throw std::invalid_argument("bad group spec: expected comma-separated integers");
    factors.push_back(value);
    if (comma == text.size()) break;
    pos = comma + 1;
  }
  return Group(std::move(factors));
}

std::string Group::spec_string() const {
  std::string out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(factors_[i]);
  }
  return out;
}

bool Group::is_cyclic() const {
  for (std::size_t i = 0; i < factors_.size(); ++i)
    for (std::size_t j = i + 1; j < factors_.size(); ++j)
      if (std::gcd(factors_[i], factors_[j]) > 1) return false;
  return true;
}

Element Group::element(int index) const {
  if (index < 0 || index >= n_) throw std::out_of_range("element index out of range");
  int k = rank();
  Element e;
  e.index = index;
  e.coords.assign(coords_.begin() + static_cast<std::size_t>(index) * k,
                  coords_.begin() + static_cast<std::size_t>(index + 1) * k);
  return e;
}

int Group::index_of(const std::vector<int>& coords) const {
  if (coords.size() != factors_.size())
    throw std::invalid_argument("coordinate arity does not match group spec");
  int index = 0;
  for (int i = 0; i < rank(); ++i) {
    if (coords[i] < 0 || coords[i] >= factors_[i])
      throw std::invalid_argument("coordinate out of range for group spec");
    index += coords[i] * strides_[i];
  }
  return index;
}

int Group::add(int a, int b) const {
  int k = rank();
  const int* ca = &coords_[static_cast<std::size_t>(a) * k];
  const int* cb = &coords_[static_cast<std::size_t>(b) * k];
  int out = 0;
  for (int i = 0; i < k; ++i) {
    int s = ca[i] + cb[i];
    if (s >= factors_[i]) s -= factors_[i];
    out += s * strides_[i];
  }
  return out;
}

int Group::sub(int a, int b) const { return add(a, neg_[b]); }

void Group::check_member(const Element& e, const char* op) const {
  if (e.coords.size() != factors_.size())
    throw std::invalid_argument(std::string(op) + ": element spec mismatch");
  int index = 0;
  for (int i = 0; i < rank(); ++i) {
    if (e.coords[i] < 0 || e.coords[i] >= factors_[i])
      throw std::invalid_argument(std::string(op) + ": element spec mismatch");
    index += e.coords[i] * strides_[i];
  }
  if (index != e.index)
    throw std::invalid_argument(std::string(op) + ": element index inconsistent with coords");
}

Element Group::add(const Element& a, const Element& b) const {
  check_member(a, "add");
  check_member(b, "add");
  return element(add(a.index, b.index));
}

Element Group::neg(const Element& a) const {
  check_member(a, "neg");
  return element(neg_[a.index]);
}

std::vector<Permutation> Group::automorphisms(int cap) const {
  if (n_ > cap) throw ScaleError("group order exceeds automorphism enumeration cap");
  int k = rank();

  // Candidate images for basis vector e_i: elements killed by factor d_i.
  std::vector<std::vector<int>> cand(k);
  long long total = 1;
  for (int i = 0; i < k; ++i) {
    for (int x = 0; x < n_; ++x)
      if (factors_[i] % order_[x] == 0) cand[i].push_back(x);
    total *= static_cast<long long>(cand[i].size());
    if (total > kMaxAutCandidates)
      throw ScaleError("automorphism candidate space exceeds supported scale");
  }

  std::vector<Permutation> out;
  std::vector<int> choice(k, 0);
  // mult[i][c] = c * image(e_i), maintained per choice of image.
  std::vector<std::vector<int>> mult(k);
  for (int i = 0; i < k; ++i) mult[i].resize(factors_[i]);
  std::vector<int> image(n_);
  std::vector<char> seen(n_);

  while (true) {
    for (int i = 0; i < k; ++i) {
      int g = cand[i][choice[i]];
      mult[i][0] = 0;
      for (int c = 1; c < factors_[i]; ++c) mult[i][c] = add(mult[i][c - 1], g);
    }
    std::fill(seen.begin(), seen.end(), 0);
    bool bijective = true;
    for (int v = 0; v < n_; ++v) {
      const int* c = &coords_[static_cast<std::size_t>(v) * k];
      int img = 0;
      for (int i = 0; i < k; ++i) img = add(img, mult[i][c[i]]);
      image[v] = img;
      if (seen[img]) {
        bijective = false;
        break;
      }
      seen[img] = 1;
    }
    if (bijective) out.emplace_back(image);

    int i = k - 1;
    while (i >= 0 && ++choice[i] == static_cast<int>(cand[i].size())) choice[i--] = 0;
    if (i < 0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Subgroup> Group::subgroups(int cap) const {
  if (n_ > cap) throw ScaleError("group order exceeds subgroup enumeration cap");

  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> queue;
  queue.push_back({0});
  seen.insert(queue.back());

  std::vector<char> member(n_);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    std::vector<int> h = queue[head];  // copy: queue grows below
    std::fill(member.begin(), member.end(), 0);
    for (int v : h) member[v] = 1;
    for (int g = 1; g < n_; ++g) {
      if (member[g]) continue;
      // <H, g> = union of H + t*g over t < order(g).
      std::vector<char> ext_member(member.begin(), member.end());
      int shift = 0;
      for (int t = 1; t < order_[g]; ++t) {
        shift = add(shift, g);
        for (int v : h) ext_member[add(v, shift)] = 1;
      }
      std::vector<int> ext;
      for (int v = 0; v < n_; ++v)
        if (ext_member[v]) ext.push_back(v);
      if (seen.insert(ext).second) queue.push_back(std::move(ext));
    }
  }

  std::vector<Subgroup> out;
  out.reserve(queue.size());
  for (auto& elems : seen) out.push_back(Subgroup{elems});
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements < b.elements;
  });
  return out;
}

std::vector<std::vector<int>> Group::cosets(const Subgroup& h) const {
  std::vector<char> covered(n_, 0);
  std::vector<std::vector<int>> out;
  for (int rep = 0; rep < n_; ++rep) {
    if (covered[rep]) continue;
    std::vector<int> coset;
    coset.reserve(h.elements.size());
    for (int v : h.elements) {
      int w = add(rep, v);
      covered[w] = 1;
      coset.push_back(w);
    }
    std::sort(coset.begin(), coset.end());
    out.push_back(std::move(coset));
  }
  return out;
}

}  // namespace caydis
