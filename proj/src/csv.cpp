// csv.cpp (implementation follows)
