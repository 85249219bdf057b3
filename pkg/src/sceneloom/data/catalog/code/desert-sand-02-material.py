"""Desert Sand 02 Material generator (Materials)."""

PARAMS = {
    "size": 3.385,
    "detail": 5,
    "roughness": 0.107,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Desert Sand 02 Material"
    for key, value in params.items():
        node[key] = value
    return node
