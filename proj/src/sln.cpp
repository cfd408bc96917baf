// sln.cpp (implementation follows)
