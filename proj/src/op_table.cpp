#include "singq/op_table.hpp"

namespace singq {

int apply(const OpTable& t, int x, int y) {
    if (x < 0 || x >= t.size() || y < 0 || y >= t.size())
        throw DomainError("operands out of range for table of size " +
                          std::to_string(t.size()));
    return t.at(x, y);
}

}  // namespace singq
