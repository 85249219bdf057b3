"""Velvet Cloth 08 Material generator (Materials)."""

PARAMS = {
    "size": 0.516,
    "detail": 3,
    "roughness": 0.009,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Velvet Cloth 08 Material"
    for key, value in params.items():
        node[key] = value
    return node
