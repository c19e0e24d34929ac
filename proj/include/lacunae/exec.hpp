#pragma once

namespace lacunae {

// Every kernel with an OpenMP path keeps its serial version; tests assert the
// two agree exactly and bench/ compares their timings.
enum class Exec { serial, parallel };

int max_threads();

}  // namespace lacunae
