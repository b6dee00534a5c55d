/*
   Copyright 2026 jscoh contributors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/*
 * Document formats (all JSON, coefficients in the Scalar text grammar):
 *
 * Algebra:
 *   {"name": "D_t", "even_basis": ["e1","e2"], "odd_basis": ["x","y"],
 *    "products": [{"left":"e1","right":"x","result":{"x":"1/2"}}, ...]}
 *   Unlisted products are zero. Each unordered pair may be stated once;
 *   the reversed order is filled in with the supercommutativity sign, and
 *   stating both orders inconsistently is an error. Odd-square diagonals
 *   must be absent or zero.
 *
 * Bimodule (loaded against an algebra):
 *   {"name": "M", "module_basis": {"even": [...], "odd": [...]},
 *    "actions": [{"left":"e1","right":"m","result":{"m":"1/2"}}, ...]}
 *   "left" is an algebra basis name, "right" a module basis name; entries
 *   define the left action, the right action is derived.
 *
 * Cocycle:
 *   {"parity": 1, "entries": [{"left":"e1","right":"x",
 *    "value":{"~e1":"1","~e2":"-1"}}, ...]}
 *   Omitted pairs are zero; reversed pairs are derived with the
 *   supersymmetry sign.
 */

#ifndef JSCOH_JSON_IO_HPP
#define JSCOH_JSON_IO_HPP

#include <string>

#include <json.hpp>

#include "jscoh/bimodule.hpp"
#include "jscoh/cohomology.hpp"
#include "jscoh/superalgebra.hpp"

namespace jscoh {

SuperAlgebra load_algebra(const nlohmann::json& doc);
SuperAlgebra load_algebra_file(const std::string& path);
nlohmann::json serialize_algebra(const SuperAlgebra& A, const std::string& name);

SuperBimodule load_bimodule(const nlohmann::json& doc, const SuperAlgebra& A);
SuperBimodule load_bimodule_file(const std::string& path, const SuperAlgebra& A);

Cocycle load_cocycle(const nlohmann::json& doc, const SuperAlgebra& A, const SuperBimodule& M);
Cocycle load_cocycle_file(const std::string& path, const SuperAlgebra& A,
                          const SuperBimodule& M);
nlohmann::json serialize_cocycle(const Cocycle& h, const SuperAlgebra& A,
                                 const SuperBimodule& M);

nlohmann::json read_json_file(const std::string& path);

}  // namespace jscoh

#endif
