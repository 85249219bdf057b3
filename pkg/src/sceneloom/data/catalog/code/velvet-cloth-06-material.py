"""Velvet Cloth 06 Material generator (Materials)."""

PARAMS = {
    "size": 2.664,
    "detail": 1,
    "roughness": 0.123,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Velvet Cloth 06 Material"
    for key, value in params.items():
        node[key] = value
    return node
