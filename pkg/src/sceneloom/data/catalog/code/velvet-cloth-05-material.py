"""Velvet Cloth 05 Material generator (Materials)."""

PARAMS = {
    "size": 3.048,
    "detail": 2,
    "roughness": 0.179,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Velvet Cloth 05 Material"
    for key, value in params.items():
        node[key] = value
    return node
