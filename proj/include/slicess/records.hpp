#pragma once

#include <string>
#include <string_view>

#include "slicess/column.hpp"

namespace slicess {

// Line-oriented key=value serialization of a page; integers only.
//
//   slicess-records 1
//   spectrum=MGL/4 base=real region=0,0,0,0 page=inf
//   meta grading=associated_graded
//   entry p=0 q=0 w=0 group=Z/4 stab=1 labels=1
std::string to_records(const Page& page);
Page parse_records(std::string_view text);

// Compact group syntax used in records: to_string() without blanks.
std::string group_token(const GroupDescriptor& g);
GroupDescriptor parse_group_token(std::string_view token);

}  // namespace slicess
