#pragma once

// Generated by tools/fixturegen.cpp; do not edit by hand.
// JSON documents for the bundled example links, embedded so the
// library needs no data directory at runtime.

namespace milnorkit::bundled {

inline const char* k_borromean = R"json({"components":[[1,4],[5,8],[9,12]],"crossings":[[4,5,1,8],[12,1,9,2],[5,10,6,9],[2,6,3,7],[10,4,11,3],[7,11,8,12]],"name":"borromean"})json";

inline const char* k_borromean_alt = R"json({"components":[[1,4],[5,10],[11,20]],"crossings":[[10,11,5,20],[4,12,1,11],[12,2,13,1],[13,6,14,5],[6,15,7,14],[15,2,16,3],[3,16,4,17],[7,17,8,18],[18,8,19,9],[9,19,10,20]],"name":"borromean_alt"})json";

inline const char* k_c4 = R"json({"components":[[1,8],[9,20],[21,26],[27,52]],"crossings":[[26,27,21,52],[20,28,9,27],[8,29,1,28],[29,2,30,1],[30,10,31,9],[10,32,11,31],[32,2,33,3],[3,33,4,34],[11,34,12,35],[35,12,36,13],[13,36,14,37],[37,22,38,21],[22,39,23,38],[14,40,15,39],[40,16,41,15],[16,42,17,41],[4,43,5,42],[43,6,44,5],[17,44,18,45],[45,18,46,19],[46,6,47,7],[7,47,8,48],[19,48,20,49],[23,49,24,50],[50,24,51,25],[25,51,26,52]],"name":"c4"})json";

inline const char* k_hopf = R"json({"components":[[1,2],[3,4]],"crossings":[[1,3,2,4],[3,1,4,2]],"name":"hopf"})json";

inline const char* k_hopf_alt = R"json({"components":[[1,2],[3,6]],"crossings":[[2,3,1,6],[3,2,4,1],[4,6,5,5]],"name":"hopf_alt"})json";

inline const char* k_k1 = R"json({"components":[[1,8],[9,12]],"crossings":[[12,2,9,1],[9,4,10,5],[8,12,1,11],[5,10,6,11],[2,8,3,7],[6,4,7,3]],"framings":[0],"knot_component":1,"name":"k1","surgered":[2],"unlink_assertion":true})json";

inline const char* k_k2 = R"json({"components":[[1,12],[13,18],[19,24]],"crossings":[[17,24,18,23],[3,18,4,13],[6,14,7,13],[24,1,19,12],[19,9,20,10],[14,20,15,21],[1,17,2,16],[8,15,9,16],[22,2,23,3],[21,8,22,7],[4,12,5,11],[10,6,11,5]],"framings":[0,0],"knot_component":1,"name":"k2","surgered":[2,3],"unlink_assertion":true})json";

inline const char* k_k3 = R"json({"components":[[1,56],[57,72],[73,96],[97,108]],"crossings":[[106,26,107,25],[107,28,108,29],[94,1,95,56],[95,53,96,54],[70,2,71,1],[71,52,72,53],[2,58,3,57],[51,72,52,57],[3,74,4,73],[50,96,51,73],[74,5,75,4],[75,49,76,50],[5,58,6,59],[48,60,49,59],[61,6,62,7],[60,48,61,47],[77,7,78,8],[76,47,77,46],[8,78,9,79],[45,80,46,79],[81,9,82,10],[80,45,81,44],[10,98,11,97],[43,108,44,97],[98,12,99,11],[99,42,100,43],[82,13,83,12],[83,41,84,42],[13,86,14,85],[40,84,41,85],[86,15,87,14],[87,39,88,40],[62,16,63,15],[63,38,64,39],[16,66,17,65],[37,64,38,65],[89,17,90,18],[88,37,89,36],[18,90,19,91],[35,92,36,91],[19,66,20,67],[34,68,35,67],[69,20,70,21],[68,34,69,33],[93,21,94,22],[92,33,93,32],[101,22,102,23],[100,32,101,31],[23,102,24,103],[30,104,31,103],[105,24,106,25],[104,30,105,29],[26,56,27,55],[54,28,55,27]],"framings":[0,0,0],"knot_component":1,"name":"k3","surgered":[2,3,4],"unlink_assertion":true})json";

inline const char* k_unlink2 = R"json({"components":[],"crossings":[],"name":"unlink2","zero_crossing_components":2})json";

inline const char* k_w3br = R"json({"components":[[1,6],[7,12],[13,24]],"crossings":[[5,12,6,11],[15,6,16,1],[18,2,19,1],[12,13,7,24],[7,21,8,22],[2,8,3,9],[13,5,14,4],[20,3,21,4],[10,14,11,15],[9,20,10,19],[16,24,17,23],[22,18,23,17]],"name":"w3br"})json";

inline const char* k_whitehead = R"json({"components":[[1,4],[5,12]],"crossings":[[4,6,1,5],[1,8,2,9],[12,4,5,3],[9,2,10,3],[6,12,7,11],[10,8,11,7]],"name":"whitehead"})json";

}  // namespace milnorkit::bundled
