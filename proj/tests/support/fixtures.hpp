#pragma once

// Order-8 crystallization with H_1 = Z/2 (the only one in the order <= 8 census).
inline constexpr const char* kRp3Line =
    "gem1:3:8:1,0,5,6,7,2,3,4|2,5,0,7,6,1,4,3|3,6,7,0,5,4,1,2|4,7,6,5,0,3,2,1";
