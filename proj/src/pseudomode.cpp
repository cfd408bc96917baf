// pseudomode.cpp (implementation follows)
