// Copyright 2026 The hgs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HGS_TESTS_FIXTURES_H
#define HGS_TESTS_FIXTURES_H

#include "hgs/hypergraph.h"

namespace hgs::fixtures {

// The four example hypergraphs on {1,2,3,4}: g_b = g_a + {Φ, {2,3}},
// g_c = g_a -+ {1}, g_d = g_a -- {1} (the last two before renumbering).
inline Hypergraph g_a() {
    return Hypergraph(4, {{1}, {2, 3}, {3, 4}, {1, 2, 3}});
}
inline Hypergraph g_b() {
    return Hypergraph(4, {{}, {1}, {3, 4}, {1, 2, 3}});
}
// Renumbered: old vertices 2,3,4 become 1,2,3.
inline Hypergraph g_c() {
    return Hypergraph(3, {{1, 2}, {2, 3}});
}
inline Hypergraph g_d() {
    return Hypergraph(3, {{}, {2, 3}});
}
inline Hypergraph star3() {
    return Hypergraph(3, {{1, 2}, {1, 3}});
}

}  // namespace hgs::fixtures

#endif  // HGS_TESTS_FIXTURES_H
