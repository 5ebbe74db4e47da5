#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace clab {

/// Finite category: objects and morphisms are indices, composition is a total
/// table on composable pairs. Identities are ordinary morphisms.
class FinCat {
 public:
  struct Mor {
    size_t dom, cod;
    std::string name;
  };

  /// composition[g][f] = index of g o f when cod(f) = dom(g), else -1.
  /// Validates identities, totality and associativity; throws Error.
  static FinCat make(std::vector<std::string> objects, std::vector<Mor> morphisms,
                     std::vector<size_t> identities, std::vector<std::vector<int>> composition);

  size_t objects() const { return object_names_.size(); }
  const std::string& object_name(size_t c) const { return object_names_[c]; }
  size_t morphisms() const { return mors_.size(); }
  const Mor& mor(size_t f) const { return mors_[f]; }
  size_t id(size_t c) const { return ids_[c]; }

  /// g after f.
  size_t compose(size_t g, size_t f) const;

  std::vector<size_t> hom(size_t a, size_t b) const;  // ascending morphism indices

  /// An object with exactly one morphism from every object, if any.
  std::optional<size_t> terminal() const { return terminal_; }

 private:
  std::vector<std::string> object_names_;
  std::vector<Mor> mors_;
  std::vector<size_t> ids_;
  std::vector<std::vector<int>> comp_;
  std::optional<size_t> terminal_;
};

FinCat one_object_site();

/// {0 -> 1}: terminal object 1, but 0 has no point.
FinCat arrow_site();

/// Two objects 1 <-> c with p o s = id_1 (so e = s o p idempotent on c).
FinCat retract_site();

/// Exactly one morphism between any ordered pair of objects.
FinCat indiscrete_site(std::vector<std::string> objects);

}  // namespace clab
