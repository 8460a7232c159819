#include "koszulkit/error.hpp"
#include "koszulkit/fpmod.hpp"
#include "koszulkit/parse.hpp"

namespace koszulkit {

namespace {

Matrix parse_matrix(const RingHandle& ring, Scanner& in) {
  in.expect('[');
  std::vector<std::vector<Poly>> rows;
  if (!in.accept(']')) {
    rows.emplace_back();
    while (true) {
      rows.back().push_back(parse_poly(ring, in));
      if (in.accept(',')) continue;
      if (in.accept(';')) {
        rows.emplace_back();
        continue;
      }
      in.expect(']');
      break;
    }
  }
  std::size_t ncols = rows.empty() ? 0 : rows[0].size();
  for (const auto& r : rows) {
    if (r.size() != ncols) in.fail("matrix rows have different lengths");
  }
  Matrix m(ring, rows.size(), ncols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < ncols; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

FPModule parse_item(const RingHandle& ring, Scanner& in) {
  if (in.accept_word("module")) {
    FPModule M = parse_item(ring, in);
    if (in.accept_word("over")) in.identifier();
    in.accept(';');
    return M;
  }
  if (in.accept_word("coker")) return FPModule::coker(parse_matrix(ring, in));
  if (in.accept_word("sum")) {
    in.expect('(');
    std::vector<FPModule> parts;
    if (!in.accept(')')) {
      do {
        parts.push_back(parse_item(ring, in));
      } while (in.accept(','));
      in.expect(')');
    }
    return direct_sum(parts, ring);
  }
  if (in.peek() == '0') {
    in.digits();
    return FPModule::zero(ring);
  }
  if (in.accept_word("R")) {
    if (in.accept('^')) {
      std::string k = in.digits();
      if (k.size() > 3) in.fail("free rank too large");
      return FPModule::free(ring, std::stoul(k));
    }
    if (in.accept('/')) return FPModule::cyclic(parse_ideal(ring, in));
    return FPModule::free(ring, 1);
  }
  in.fail("expected a module literal");
}

}  // namespace

FPModule parse_module(const RingHandle& ring, std::string_view text) {
  Scanner in(text);
  FPModule M = parse_item(ring, in);
  if (!in.at_end()) in.fail("unexpected trailing text");
  return M;
}

}  // namespace koszulkit
