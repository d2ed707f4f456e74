"""测试包"""

import os

FIXTURES = os.path.join(os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "fixtures")


def fixture_path(name: str) -> str:
    """fixtures 目录下文件的绝对路径"""
    return os.path.join(FIXTURES, name)


def load_fixture(name: str):
    """读取 fixtures 目录下的工作区文件"""
    from joinframes.parsers import load_workspace

    return load_workspace(fixture_path(name))
