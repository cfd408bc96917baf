// generator.cpp (implementation follows)
