#include "genuscount/constraint.hpp"

#include <sstream>
#include <stdexcept>

namespace genuscount {

Constraint Constraint::with_type(PartitionType t) {
  Constraint c;
  c.min_block_size = t.has_singletons() ? 1 : 1;
  c.ctype = std::move(t);
  return c;
}

void Constraint::validate(int n) const {
  if (min_block_size != 1 && min_block_size != 2) {
    throw std::invalid_argument("Constraint: min_block_size must be 1 or 2");
  }
  if (parts && (*parts < 1 || *parts > n)) {
    throw std::invalid_argument("Constraint: parts out of range");
  }
  if (ctype) {
    if (ctype->weight() != n) throw std::invalid_argument("Constraint: ctype weight != n");
    if (parts && *parts != ctype->parts()) {
      throw std::invalid_argument("Constraint: parts inconsistent with ctype");
    }
    if (min_block_size > ctype->min_part()) {
      throw std::invalid_argument("Constraint: min_block_size inconsistent with ctype");
    }
  }
}

std::string Constraint::key() const {
  std::ostringstream out;
  out << "min" << min_block_size;
  if (parts) out << "_parts" << *parts;
  if (ctype) out << "_type" << ctype->key();
  return out.str();
}

bool Constraint::operator==(const Constraint& other) const {
  return min_block_size == other.min_block_size && parts == other.parts && ctype == other.ctype;
}

}  // namespace genuscount
