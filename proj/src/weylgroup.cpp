#include "dpsym/weylgroup.hpp"

#include <algorithm>
#include <cctype>
#include <initializer_list>
#include <set>
#include <stdexcept>
#include <string>

namespace dpsym {

namespace {

using Cycle = std::initializer_list<int>;

template <std::size_t N>
std::array<int, N> from_cycles(std::initializer_list<Cycle> cycles) {
  std::array<int, N> perm{};
  for (std::size_t i = 0; i < N; ++i) perm[i] = static_cast<int>(i);
  for (const Cycle& c : cycles) {
    const int* first = c.begin();
    for (const int* p = c.begin(); p != c.end(); ++p) perm[*p] = (p + 1 == c.end()) ? *first : *(p + 1);
  }
  return perm;
}

PicMap from_images(std::initializer_list<DivisorClass> images) {
  PicMap m;
  int j = 0;
  for (const DivisorClass& c : images) m.col(j++) = c;
  return m;
}

PicMap reflection_matrix(int i) {
  const DivisorClass a = symmetry_root(i);
  PicMap m;
  for (int j = 0; j < kPicRank; ++j) {
    const DivisorClass e = DivisorClass::Unit(j);
    m.col(j) = e + intersection(e, a) * a;
  }
  return m;
}

// Basis images (H_f, H_g, E_1..E_8) of the diagram automorphisms.
PicMap automorphism_matrix(Generator g) {
  const DivisorClass hf = H_f(), hg = H_g();
  switch (g) {
    case Generator::m0:
      return from_images({hg, hf, E(1), E(2), E(3), E(4), E(7), E(8), E(5), E(6)});
    case Generator::m1:
      return from_images({hf, hf + hg - E(1) - E(2), hf - E(2), hf - E(1), E(7), E(8), E(5), E(6),
                          E(3), E(4)});
    case Generator::m2:
      return from_images({hf + hg - E(1) - E(2), hg, hg - E(2), hg - E(1), E(5), E(6), E(3), E(4),
                          E(7), E(8)});
    case Generator::r:
      return from_images({hg, hf + hg - E(1) - E(2), hg - E(2), hg - E(1), E(5), E(6), E(7), E(8),
                          E(3), E(4)});
    case Generator::r2:
      return from_images({hf + hg - E(1) - E(2), hf, hf - E(2), hf - E(1), E(7), E(8), E(3), E(4),
                          E(5), E(6)});
    default:
      throw std::invalid_argument("not a diagram automorphism");
  }
}

using RootKey = std::array<Rational, kNumSimpleRoots>;

RootKey key_of(const RationalRootVector& v) {
  const RationalRootVector c = canonical_mod_delta(v);
  RootKey k;
  for (int i = 0; i < kNumSimpleRoots; ++i) k[i] = c(i);
  return k;
}

}  // namespace

std::string_view to_string(Generator g) {
  static constexpr std::array<std::string_view, 12> names = {
      "w0", "w1", "w2", "w3", "w4", "w5", "w6", "m0", "m1", "m2", "r", "r2"};
  return names[static_cast<std::size_t>(g)];
}

Generator parse_generator(std::string_view s) {
  for (Generator g : kAllGenerators)
    if (to_string(g) == s) return g;
  throw ParseError("unknown generator '" + std::string(s) + "'");
}

Word parse_word(std::string_view s) {
  Word w;
  std::string token;
  auto flush = [&] {
    if (!token.empty()) w.push_back(parse_generator(token));
    token.clear();
  };
  for (char ch : s) {
    if (ch == ',' || std::isspace(static_cast<unsigned char>(ch)))
      flush();
    else
      token.push_back(ch);
  }
  flush();
  return w;
}

std::string to_string(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ',';
    out += to_string(w[i]);
  }
  return out;
}

Generator inverse(Generator g) {
  if (g == Generator::r) return Generator::r2;
  if (g == Generator::r2) return Generator::r;
  return g;
}

std::array<int, kNumSimpleRoots> alpha_permutation(Generator g) {
  switch (g) {
    case Generator::m0: return from_cycles<kNumSimpleRoots>({{3, 5}, {4, 6}});
    case Generator::m1: return from_cycles<kNumSimpleRoots>({{0, 4}, {1, 3}});
    case Generator::m2: return from_cycles<kNumSimpleRoots>({{0, 6}, {1, 5}});
    case Generator::r: return from_cycles<kNumSimpleRoots>({{0, 6, 4}, {1, 5, 3}});
    case Generator::r2: return from_cycles<kNumSimpleRoots>({{0, 4, 6}, {1, 3, 5}});
    default:
      throw std::invalid_argument("reflections do not permute the simple roots");
  }
}

std::array<int, kNumSurfaceRoots> delta_permutation(Generator g) {
  switch (g) {
    case Generator::m0: return from_cycles<kNumSurfaceRoots>({{1, 2}});
    case Generator::m1: return from_cycles<kNumSurfaceRoots>({{0, 2}});
    case Generator::m2: return from_cycles<kNumSurfaceRoots>({{0, 1}});
    case Generator::r: return from_cycles<kNumSurfaceRoots>({{0, 1, 2}});
    case Generator::r2: return from_cycles<kNumSurfaceRoots>({{0, 2, 1}});
    default: return from_cycles<kNumSurfaceRoots>({});
  }
}

const PicMap& generator_picmap(Generator g) {
  static const std::array<PicMap, 12> table = [] {
    std::array<PicMap, 12> t;
    for (Generator s : kAllGenerators) {
      t[static_cast<std::size_t>(s)] =
          is_reflection(s) ? reflection_matrix(reflection_index(s)) : automorphism_matrix(s);
    }
    return t;
  }();
  return table[static_cast<std::size_t>(g)];
}

PicMap word_to_picmap(std::span<const Generator> w) {
  PicMap m = PicMap::Identity();
  for (Generator g : w) m = m * generator_picmap(g);
  return m;
}

Word invert_word(std::span<const Generator> w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(inverse(*it));
  return out;
}

bool is_cremona_isometry(const PicMap& m) {
  const GramMatrix& j = intersection_form();
  const DivisorClass k = -anticanonical();
  return m.transpose() * j * m == j && m * k == k;
}

RootImageMatrix root_images(const PicMap& m) {
  RootImageMatrix out;
  for (int i = 0; i < kNumSimpleRoots; ++i) out.col(i) = to_alpha_coords(m * symmetry_root(i));
  return out;
}

std::optional<std::array<int, kNumSurfaceRoots>> surface_root_permutation(const PicMap& m) {
  std::array<int, kNumSurfaceRoots> perm{};
  for (int i = 0; i < kNumSurfaceRoots; ++i) {
    const DivisorClass image = m * surface_root(i);
    perm[i] = -1;
    for (int j = 0; j < kNumSurfaceRoots; ++j)
      if (image == surface_root(j)) perm[i] = j;
    if (perm[i] < 0) return std::nullopt;
  }
  return perm;
}

std::optional<RootVector> translation_delta_vector(const PicMap& m) {
  const DivisorClass delta = anticanonical();
  RootVector n;
  for (int i = 0; i < kNumSimpleRoots; ++i) {
    const DivisorClass shift = m * symmetry_root(i) - symmetry_root(i);
    // shift must be n_i * delta; read n_i off the H_f coefficient (delta has 2 there).
    if (shift(0) % 2 != 0) return std::nullopt;
    n(i) = shift(0) / 2;
    if (shift != n(i) * delta) return std::nullopt;
  }
  return n;
}

RationalRootVector canonical_mod_delta(const RationalRootVector& v) {
  // delta has alpha_0 coefficient 1.
  return v - v(0) * null_root().cast<Rational>();
}

RationalRootVector kac_vector(const RootVector& n) {
  // Unknowns alpha_1..alpha_6 coefficients; alpha_0 coefficient pinned to 0.
  const Eigen::Matrix<Integer, kNumSimpleRoots, kNumSimpleRoots - 1> a =
      cartan_matrix().rightCols(kNumSimpleRoots - 1);
  const auto sol = solve_exact(a, n);
  if (!sol) throw NotTranslation("delta vector is not realized by any Kac translation");
  RationalRootVector alpha = RationalRootVector::Zero();
  alpha.tail(kNumSimpleRoots - 1) = *sol;
  return alpha;
}

RationalRootVector kac_vector(const PicMap& m) {
  const auto n = translation_delta_vector(m);
  if (!n) throw NotTranslation("map has a nontrivial finite part");
  return kac_vector(*n);
}

Rational translation_norm(const RationalRootVector& alpha) {
  return -root_pairing(alpha, alpha);
}

Rational translation_norm(const PicMap& m) {
  return translation_norm(kac_vector(m));
}

std::optional<Word> find_conjugator(const RationalRootVector& src, const RationalRootVector& dst,
                                    const ConjugatorOptions& opts) {
  const Rational src_norm = translation_norm(src);
  const Rational dst_norm = translation_norm(dst);
  if (src_norm != dst_norm)
    throw NormMismatch("norms differ: " + to_string(src_norm) + " vs " + to_string(dst_norm));

  std::vector<Generator> symbols(kReflections.begin(), kReflections.end());
  if (opts.include_automorphisms) symbols.insert(symbols.end(), kAutomorphisms.begin(), kAutomorphisms.end());

  const RootKey target = key_of(dst);
  struct Node {
    Word word;
    RationalRootVector image;
  };
  std::vector<Node> frontier{{Word{}, src}};
  std::set<RootKey> seen{key_of(src)};
  if (key_of(src) == target) return Word{};

  for (int len = 1; len <= opts.max_len && !frontier.empty(); ++len) {
    std::vector<Node> next;
    // Prepending s to every frontier word, s outermost, keeps each level in
    // lexicographic order.
    for (Generator s : symbols) {
      const Word prefix{s};
      for (const Node& node : frontier) {
        RationalRootVector image = apply_word<Rational>(prefix, node.image);
        RootKey k = key_of(image);
        if (!seen.insert(k).second) continue;
        Word w;
        w.reserve(node.word.size() + 1);
        w.push_back(s);
        w.insert(w.end(), node.word.begin(), node.word.end());
        if (k == target) return w;
        next.push_back({std::move(w), std::move(image)});
      }
    }
    frontier = std::move(next);
  }
  return std::nullopt;
}

}  // namespace dpsym
