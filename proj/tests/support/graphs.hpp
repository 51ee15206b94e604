#pragma once

#include <vector>

#include "gvt/graph.hpp"

namespace testgraphs {

inline gvt::Graph p2() { return gvt::Graph({"u", "v"}, {{0, 1}}); }

inline gvt::Graph p4() {
    return gvt::Graph({"a", "b", "c", "d"}, {{0, 1}, {1, 2}, {2, 3}});
}

inline gvt::Graph k3() {
    return gvt::Graph({"v1", "v2", "v3"}, {{0, 1}, {1, 2}, {0, 2}});
}

inline gvt::Graph k4() {
    return gvt::Graph({"v1", "v2", "v3", "v4"},
                      {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

inline gvt::Graph c4() {
    return gvt::Graph({"v1", "v2", "v3", "v4"}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
}

inline gvt::Graph b2() { return gvt::Graph({"u", "v"}, {{0, 1}, {0, 1}}); }

/// Two degree-3 vertices joined by an edge and two length-2 paths.
inline gvt::Graph theta() {
    return gvt::Graph({"u", "a", "b", "v"},
                      {{0, 3}, {0, 1}, {1, 3}, {0, 2}, {2, 3}});
}

inline std::vector<gvt::Graph> all_small() {
    return {p2(), p4(), k3(), k4(), c4(), b2(), theta()};
}

}  // namespace testgraphs
