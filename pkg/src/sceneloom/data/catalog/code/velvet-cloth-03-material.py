"""Velvet Cloth 03 Material generator (Materials)."""

PARAMS = {
    "size": 2.087,
    "detail": 1,
    "roughness": 0.997,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Velvet Cloth 03 Material"
    for key, value in params.items():
        node[key] = value
    return node
