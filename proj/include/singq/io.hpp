#pragma once

#include <optional>
#include <string>

#include "singq/group.hpp"
#include "singq/singquandle.hpp"

namespace singq {

// Structure files:
//
//   singquandle n=<N>          quandle n=<N>         group n=<N>
//   op:                        op:                   mul:
//   <N rows of N entries>      <N rows>              <N rows>
//   r1:
//   <N rows>
//   r2:
//   <N rows>
//
// '#' starts a comment; blank lines are ignored.  Entries are element
// indices in 0..N-1.

// Raw tables of a structure file, before any axiom checking.
struct StructureTables {
    OpTable op;
    std::optional<OpTable> r1;  // present iff the file is a singquandle
    std::optional<OpTable> r2;

    bool is_singquandle() const { return r1.has_value(); }
};

StructureTables parse_structure(const std::string& text);
std::string format_structure(const StructureTables& t);

std::string format_quandle(const Quandle& q);
std::string format_singquandle(const OrientedSingquandle& s);

// Validating loads; throw AxiomError / ParseError as appropriate.
Quandle parse_quandle(const std::string& text);              // accepts either header
OrientedSingquandle parse_singquandle(const std::string& text);

FiniteGroup parse_group(const std::string& text);
std::string format_group(const FiniteGroup& g);

// Whole-file helpers; throw Error with the path in the message on I/O
// failure.
std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace singq
