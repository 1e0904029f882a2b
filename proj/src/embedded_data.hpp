#pragma once

namespace fdom::data {

extern const char* const kCoxeterGraph;
extern const char* const kCoxeterGenerators;

}  // namespace fdom::data
