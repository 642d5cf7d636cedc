"""
计算服务包：格、不变量、界、曲线、正合列、枚举、直纹面与构形
"""
