#pragma once

namespace pentaglue::detail {

extern const char* const kP21Gluing;
extern const char* const kP22Gluing;
extern const char* const kP22Embedding;
extern const char* const kP41Gluing;
extern const char* const kP41Embedding;
extern const char* const kP42Gluing;
extern const char* const kP42Embedding;
extern const char* const kP43Gluing;
extern const char* const kP43Embedding;
extern const char* const kP6Gluing;
extern const char* const kP6Embedding;
extern const char* const kP8Gluing;
extern const char* const kP8Embedding;
extern const char* const kP12Gluing;
// Index into the golden-ratio point list of each cone point.
extern const int kP12Points[20];
extern const int kP12Faces[12][5];

}  // namespace pentaglue::detail
