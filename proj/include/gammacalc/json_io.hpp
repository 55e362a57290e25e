#ifndef GAMMACALC_JSON_IO_HPP
#define GAMMACALC_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "gammacalc/gamma_cat.hpp"
#include "gammacalc/gamma_set.hpp"
#include "gammacalc/law_report.hpp"
#include "gammacalc/pointed.hpp"
#include "gammacalc/prolongation.hpp"

namespace gammacalc {

using Json = nlohmann::ordered_json;

// Malformed documents raise std::invalid_argument.

Json pointed_set_to_json(FinPointedSet const &x);
FinPointedSet pointed_set_from_json(Json const &j);

Json pointed_map_to_json(PointedMap const &f);
PointedMap pointed_map_from_json(Json const &j);

Json operator_to_json(GammaOperator const &op);
GammaOperator operator_from_json(Json const &j);

// "m>n:[f(0),...,f(m)]" for f: m -> n.
std::string map_key(PointedMap const &f);
PointedMap map_from_key(std::string const &key);

// Keys for every pointed map m -> n with m, n <= bound, in (m, n, index)
// order; values are the action tables including the basepoint.
Json gamma_set_to_json(GammaSet const &a);
GammaSet gamma_set_from_json(Json const &j);

Json coend_table_to_json(CoendTable const &t);

// Indented, with arrays of scalars kept on one line.
std::string dump_json(Json const &j);

Json read_json_file(std::string const &path);
void write_json_file(std::string const &path, Json const &j);

} // namespace gammacalc

#endif // GAMMACALC_JSON_IO_HPP
