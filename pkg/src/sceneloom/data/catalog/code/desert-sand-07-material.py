"""Desert Sand 07 Material generator (Materials)."""

PARAMS = {
    "size": 3.785,
    "detail": 3,
    "roughness": 0.41,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Desert Sand 07 Material"
    for key, value in params.items():
        node[key] = value
    return node
