#pragma once

#include <string>

#include "jacksym/localization.hpp"
#include "jacksym/sym_func.hpp"

namespace jacksym::json_io {

/// JSON text forms of the public value types. Writers are deterministic:
/// fixed key order, terms in canonical partition order, big integers as
/// decimal strings. Readers throw ParseError on malformed input.

std::string partition_to_json(const Partition& lambda); // [3,1]
Partition partition_from_json(const std::string& text);

// {"num":[["2","1"],...],"den":[["1","1"],...]} with degree-ascending
// [numerator, denominator] coefficient pairs.
std::string rat_fun_to_json(const RatFun& f);
RatFun rat_fun_from_json(const std::string& text);

// {"basis":"m","terms":[{"partition":[2,1],"coeff":<rat_fun>},...]}
std::string sym_func_to_json(const SymFunc& f);
SymFunc sym_func_from_json(const std::string& text);

// {"partition":[2],"char":[{"p":1,"q":-1,"mult":1},...],
//  "euler_total":{"coeff":<rat_fun>,"u_pow":4},"euler_pos":...,
//  "euler_nonpos":...}
std::string fixed_point_to_json(const FixedPointData& data);

} // namespace jacksym::json_io
