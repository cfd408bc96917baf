// runner.cpp (implementation follows)
