// aaa.cpp (implementation follows)
