#pragma once

// Relation documents (JSON):
//
//   {"pairs":[{"dir":"LR","from":"a","to":"d"}, {"dir":"RL","from":"e","to":"b"}]}
//
// Tuple relations use "fromSeq"/"toSeq" arrays in place of "from"/"to".
// Bisimulation documents omit "dir" (or give "LR"). World names are resolved
// against the left and right models according to the orientation.

#include <string>
#include <string_view>

#include "asimkit/model.hpp"
#include "asimkit/simulation.hpp"

namespace asimkit {

// True when some pair of the document uses "fromSeq"/"toSeq".
[[nodiscard]] bool is_tuple_document(std::string_view document);

// All three throw ModelError on malformed documents or unknown worlds.
[[nodiscard]] DirectedRelation load_directed_relation(std::string_view document, const Model& left,
                                                      const Model& right);
// Plain "from"/"to" pairs are read as length-one sequences.
[[nodiscard]] TupleRelation load_tuple_relation(std::string_view document, const Model& left,
                                                const Model& right);
[[nodiscard]] WorldRelation load_world_relation(std::string_view document, const Model& left,
                                                const Model& right);

[[nodiscard]] std::string relation_document(const DirectedRelation& relation, const Model& left,
                                            const Model& right);
[[nodiscard]] std::string relation_document(const TupleRelation& relation, const Model& left,
                                            const Model& right);
[[nodiscard]] std::string relation_document(const WorldRelation& relation, const Model& left,
                                            const Model& right);

}  // namespace asimkit
