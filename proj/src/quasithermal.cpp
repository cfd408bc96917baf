// quasithermal.cpp (implementation follows)
