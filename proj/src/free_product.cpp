#include "simpmon/free_product.hpp"

#include "simpmon/error.hpp"

namespace simpmon {

FreeProduct::FreeProduct(std::vector<std::shared_ptr<const FiniteMonoid>> factors)
    : factors_(std::move(factors)) {
  for (const auto& f : factors_)
    if (!f) throw input_error("free product factor is null");
}

FreeProduct::FreeProduct(std::size_t copies,
                         std::shared_ptr<const FiniteMonoid> factor)
    : FreeProduct(std::vector<std::shared_ptr<const FiniteMonoid>>(copies, factor)) {}

std::vector<FreeProductElement> FreeProduct::generators() const {
  std::vector<FreeProductElement> out;
  for (std::size_t t = 1; t <= factors_.size(); ++t) {
    const auto& m = factor(t);
    for (Element e = 0; e < m.size(); ++e)
      if (e != m.unit()) out.push_back({Letter{t, e}});
  }
  return out;
}

bool FreeProduct::is_normal(const FreeProductElement& w) const {
  for (std::size_t i = 0; i < w.size(); ++i) {
    const Letter& l = w[i];
    if (l.factor < 1 || l.factor > factors_.size()) return false;
    const auto& m = factor(l.factor);
    if (l.element >= m.size() || l.element == m.unit()) return false;
    if (i > 0 && w[i - 1].factor == l.factor) return false;
  }
  return true;
}

void FreeProduct::validate(const FreeProductElement& w) const {
  for (const Letter& l : w) {
    if (l.factor < 1 || l.factor > factors_.size())
      throw input_error("letter references factor " + std::to_string(l.factor) +
                        " of a " + std::to_string(factors_.size()) +
                        "-fold free product");
    if (l.element >= factor(l.factor).size())
      throw input_error("letter element out of range in factor " +
                        std::to_string(l.factor));
  }
  if (!is_normal(w)) throw input_error("word is not in normal form");
}

namespace {

// Appends `l` to a normal-form word, merging with the last letter when they
// share a factor.
void push_letter(FreeProductElement& w, Letter l, const FreeProduct& m) {
  const auto& f = m.factor(l.factor);
  if (l.element == f.unit()) return;
  if (!w.empty() && w.back().factor == l.factor) {
    const Element p = f.product(w.back().element, l.element);
    w.pop_back();
    if (p != f.unit()) push_letter(w, Letter{l.factor, p}, m);
    return;
  }
  w.push_back(l);
}

}  // namespace

FreeProductElement FreeProduct::multiply(const FreeProductElement& a,
                                         const FreeProductElement& b) const {
  validate(a);
  validate(b);
  FreeProductElement out = a;
  // Merge b letter by letter; once a letter lands unmerged the rest of b is
  // already alternating and can be copied.
  std::size_t i = 0;
  for (; i < b.size(); ++i) {
    const std::size_t before = out.size();
    const bool touches = !out.empty() && out.back().factor == b[i].factor;
    push_letter(out, b[i], *this);
    if (!touches && out.size() == before + 1) {
      ++i;
      break;
    }
  }
  out.insert(out.end(), b.begin() + static_cast<std::ptrdiff_t>(i), b.end());
  return out;
}

std::string FreeProduct::to_string(const FreeProductElement& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) out += ' ';
    out += factor(w[i].factor).element_name(w[i].element) + "^(" +
           std::to_string(w[i].factor) + ")";
  }
  return out;
}

FreeProductElement fp_multiply(
    std::size_t k, const std::vector<std::shared_ptr<const FiniteMonoid>>& factors,
    const FreeProductElement& a, const FreeProductElement& b) {
  if (factors.size() != k)
    throw input_error("fp_multiply: expected " + std::to_string(k) + " factors");
  return FreeProduct(factors).multiply(a, b);
}

FreeProductHom::FreeProductHom(FreeProduct source, FreeProduct target)
    : source_(std::move(source)), target_(std::move(target)) {
  std::size_t total = 0;
  for (std::size_t t = 1; t <= source_.factor_count(); ++t) {
    offsets_.push_back(total);
    total += source_.factor(t).size();
  }
  images_.resize(total);
  defined_.assign(total, false);
  // Units always map to the unit.
  for (std::size_t t = 1; t <= source_.factor_count(); ++t)
    defined_[offsets_[t - 1] + source_.factor(t).unit()] = true;
}

std::size_t FreeProductHom::slot(Letter g) const {
  if (g.factor < 1 || g.factor > source_.factor_count() ||
      g.element >= source_.factor(g.factor).size())
    throw input_error("generator outside the source free product");
  return offsets_[g.factor - 1] + g.element;
}

void FreeProductHom::set_image(Letter generator, FreeProductElement image) {
  target_.validate(image);
  const std::size_t s = slot(generator);
  if (generator.element == source_.factor(generator.factor).unit() && !image.empty())
    throw input_error("a homomorphism must send the unit to the unit");
  images_[s] = std::move(image);
  defined_[s] = true;
}

const FreeProductElement& FreeProductHom::image(Letter generator) const {
  const std::size_t s = slot(generator);
  if (!defined_[s])
    throw input_error("homomorphism undefined on generator " +
                      source_.to_string({generator}));
  return images_[s];
}

bool FreeProductHom::defined_on(Letter generator) const {
  return defined_[slot(generator)];
}

FreeProductElement FreeProductHom::apply(const FreeProductElement& w) const {
  source_.validate(w);
  FreeProductElement out;
  for (const Letter& l : w) out = target_.multiply(out, image(l));
  return out;
}

FreeProductHom FreeProductHom::after(const FreeProductHom& other) const {
  FreeProductHom h(other.source_, target_);
  for (const auto& g : other.source_.generators())
    h.set_image(g.front(), apply(other.apply(g)));
  return h;
}

FreeProductHom FreeProductHom::identity(const FreeProduct& m) {
  FreeProductHom h(m, m);
  for (const auto& g : m.generators()) h.set_image(g.front(), g);
  return h;
}

FreeProductElement apply_hom_fp(const FreeProductHom& h,
                                const FreeProductElement& w) {
  return h.apply(w);
}

}  // namespace simpmon
