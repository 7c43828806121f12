#pragma once

#include <vector>

#include "tst/apply/transforms.hpp"
#include "tst/core/edit_tag.hpp"
#include "tst/core/token.hpp"

namespace tst {

/// One tag per token of the sequence it annotates, sentinel included.
using TagSeq = std::vector<EditTag>;

/// Executes `tags` against `seq` left to right.
///
/// KEEP emits the token, DELETE emits nothing, REPLACE_w emits w, APPEND_w
/// emits the token then w, TRANSFORM emits the transform's output. MERGE_*
/// joins the token with the next emitted token ("" or "-"); with nothing
/// after it the merge does not apply. The sentinel is always preserved: only
/// APPEND acts on it, inserting at position 1.
///
/// Throws LengthMismatch when |tags| != |seq|.
TokenSeq apply_tags(const TokenSeq& seq, const TagSeq& tags,
                    const VerbLexicon& lexicon = VerbLexicon::builtin());

bool all_keep(const TagSeq& tags);

}  // namespace tst
