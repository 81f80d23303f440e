# LICENSE: GPL-3.0
